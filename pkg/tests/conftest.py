from pathlib import Path

import pytest

from fpcProject.components.corpus_ingestion import corpus_files, load_checked
from fpcProject.utils.common import read_yaml

ROOT = Path(__file__).resolve().parents[1]
CORPUS_DIR = ROOT / "corpus"
CONTEXT_DIR = ROOT / "contexts"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"

# enough for every terminating corpus program, small enough that divergers time out quickly
TEST_FUEL = 3000
TEST_DEPTH = 12

CORPUS = corpus_files(CORPUS_DIR)


def corpus_path(name: str) -> Path:
    return CORPUS_DIR / f"{name}.fpc"


def program(name: str):
    return load_checked(corpus_path(name))


@pytest.fixture(scope="session")
def params():
    return read_yaml(ROOT / "params.yaml")


@pytest.fixture
def repo_root(monkeypatch):
    """Run from the repository root so params.yaml and schema.yaml are picked up."""
    monkeypatch.chdir(ROOT)
    return ROOT
