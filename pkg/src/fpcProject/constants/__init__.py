from pathlib import Path

CONFIG_FILE_PATH = Path("config/config.yaml")
PARAMS_FILE_PATH = Path("params.yaml")
SCHEMA_FILE_PATH = Path("schema.yaml")

# Used when the YAML files are not reachable (e.g. `fpc` run outside the repo root).
DEFAULT_FUEL = 10_000
DEFAULT_DEPTH = 50
DEFAULT_BISIM_DEPTH = 30
DEFAULT_EXEC_MAX = 200
DEFAULT_ZERO_STEP_BOUND = 10_000
DEFAULT_BATTERY_SIZE = 8
DEFAULT_BATTERY_LIMIT = 16
DEFAULT_SEED = 0
DEFAULT_JOBS = 1
DEFAULT_HOMOMORPHISM_INSTANCES = 200
DEFAULT_CORPUS_DIR = Path("corpus")
DEFAULT_CONTEXT_DIR = Path("contexts")
DEFAULT_ARTIFACTS_ROOT = Path("artifacts")

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_TIMEOUT = 3
