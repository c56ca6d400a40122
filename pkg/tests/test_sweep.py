import shutil

import pytest
import yaml

from fpcProject.pipeline.sweep import run_sweep

from conftest import CONTEXT_DIR, CORPUS_DIR, ROOT


@pytest.fixture
def sweep_dir(tmp_path, monkeypatch):
    """A working directory with the repository's params and schema, reading the shipped corpus."""
    config = yaml.safe_load((ROOT / "config" / "config.yaml").read_text())
    config.update(corpus_dir=str(CORPUS_DIR), context_dir=str(CONTEXT_DIR))
    (tmp_path / "config").mkdir()
    (tmp_path / "config" / "config.yaml").write_text(yaml.safe_dump(config))
    shutil.copy(ROOT / "params.yaml", tmp_path)
    shutil.copy(ROOT / "schema.yaml", tmp_path)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.mark.slow
def test_every_stage_passes_at_repository_params(sweep_dir, params):
    summaries = run_sweep()
    assert [s.stage for s in summaries] == [
        "corpus_ingestion",
        "operational_agreement",
        "adequacy",
        "logical_relation",
        "bisimulation",
        "executor",
        "context_equivalence",
    ]
    for summary in summaries:
        assert summary.failed == 0, summary.failures
    adequacy = summaries[2]
    assert adequacy.metrics["homomorphism_instances"] == params.homomorphism_instances
    assert (sweep_dir / "artifacts" / "executor" / "metrics.json").exists()
