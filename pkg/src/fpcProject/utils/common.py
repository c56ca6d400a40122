import os
import json
from pathlib import Path

import yaml
from box import ConfigBox
from box.exceptions import BoxValueError
from ensure import ensure_annotations
from joblib import Parallel, delayed

from fpcProject import logger


@ensure_annotations
def read_yaml(path_to_yaml: Path) -> ConfigBox:
    """Load a YAML file (config, params or schema) as a ConfigBox.

    Raises:
        ValueError: the file holds no mapping
    """
    with open(path_to_yaml, encoding="utf-8") as yaml_file:
        content = yaml.safe_load(yaml_file)
    try:
        box = ConfigBox(content)
    except BoxValueError:
        raise ValueError(f"{path_to_yaml}: yaml file is empty")
    logger.info(f"yaml file: {path_to_yaml} loaded")
    return box


@ensure_annotations
def create_directories(path_to_directories: list, verbose=True):
    """Create each directory (and its parents) if missing."""
    for path in path_to_directories:
        os.makedirs(path, exist_ok=True)
        if verbose:
            logger.info(f"created directory at: {path}")


@ensure_annotations
def save_json(path: Path, data: dict):
    """Write a report. Parent directories are created on demand.
    Args:
        path (Path): target `.json` file
        data (dict): JSON-serialisable report
    """
    create_directories([path.parent], verbose=False)
    with open(path, "w", encoding="utf-8") as f:
        json.dump(data, f, indent=2)
        f.write("\n")
    logger.info(f"report saved at: {path}")


@ensure_annotations
def load_json(path: Path) -> ConfigBox:
    """Read a report back with attribute access (`report.summary.failed`)."""
    with open(path, encoding="utf-8") as f:
        content = json.load(f)
    logger.info(f"report loaded from: {path}")
    return ConfigBox(content)


@ensure_annotations
def read_source(path: Path) -> str:
    """read a UTF-8 `.fpc` / `.ctx` source file
    Args:
        path (Path): path to the source file
    Returns:
        str: file contents
    """
    with open(path, encoding="utf-8") as f:
        text = f.read()
    logger.info(f"source file loaded from: {path}")
    return text


@ensure_annotations
def list_sources(directory: Path, suffix: str) -> list:
    """sorted list of files in `directory` with the given suffix"""
    return sorted(p for p in Path(directory).iterdir() if p.suffix == suffix)


def run_jobs(fn, items: list, jobs: int = 1) -> list:
    """map `fn` over `items`, in-process when `jobs == 1`, otherwise with joblib workers
    Args:
        fn: module-level callable (picklable)
        items (list): one argument per call
        jobs (int): joblib `n_jobs`
    Returns:
        list: results in input order
    """
    if jobs == 1:
        return [fn(item) for item in items]
    return Parallel(n_jobs=jobs)(delayed(fn)(item) for item in items)
