import os
import sys
import logging

from dotenv import load_dotenv

load_dotenv()

# Define the format of the logs: [Timestamp: Level: Module: Message]
logging_str = "[%(asctime)s: %(levelname)s: %(module)s: %(message)s]"

log_dir = os.getenv("FPC_LOG_DIR", "logs")
log_filepath = os.path.join(log_dir, "running_logs.log")

os.makedirs(log_dir, exist_ok=True)

# stdout is reserved for reports (and --json output), so the console handler writes to stderr
console_handler = logging.StreamHandler(sys.stderr)
console_handler.setLevel(os.getenv("FPC_LOG_LEVEL", "WARNING").upper())

file_handler = logging.FileHandler(log_filepath)
file_handler.setLevel(logging.INFO)

logging.basicConfig(
    level=logging.INFO,
    format=logging_str,
    datefmt="%d %B %Y %H:%M:%S",
    handlers=[file_handler, console_handler],
)

logger = logging.getLogger("fpcProjectLogger")

# Evaluators and the semantic domain recurse on term structure; deeper input raises NestingTooDeep.
sys.setrecursionlimit(max(sys.getrecursionlimit(), int(os.getenv("FPC_RECURSION_LIMIT", "10000"))))
