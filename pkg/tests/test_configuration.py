from pathlib import Path

import pytest
import yaml
from ensure import EnsureError

from fpcProject.config.configuration import DEFAULT_PARAMS, ConfigurationManager, read_yaml_or_default
from fpcProject.utils.common import list_sources, load_json, read_yaml, run_jobs, save_json

from conftest import CONTEXT_DIR, ROOT


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def test_defaults_when_files_are_missing(workdir):
    manager = ConfigurationManager(workdir / "config.yaml", workdir / "params.yaml", workdir / "schema.yaml")
    config = manager.get_logical_relation_config()
    assert config.depth == DEFAULT_PARAMS["depth"]
    assert config.battery_size == DEFAULT_PARAMS["battery"]["size"]
    assert config.root_dir.is_dir()


def test_repository_configuration(workdir, params):
    manager = ConfigurationManager(ROOT / "config" / "config.yaml", ROOT / "params.yaml", ROOT / "schema.yaml")
    assert manager.get_bisimulation_config().depth == params.bisim_depth == 30
    assert manager.get_executor_config().exec_max == params.exec_max
    ctx = manager.get_context_equivalence_config()
    assert set(ctx.suites.values()) == {"unit.ctx", "bool.ctx", "nat.ctx"}
    assert len(ctx.pairs) == 5
    assert (workdir / "artifacts" / "context_equivalence").is_dir()


def test_overrides_win_over_params(workdir):
    (workdir / "params.yaml").write_text(yaml.safe_dump({"fuel": 100, "depth": 9, "battery": {"size": 4}}))
    manager = ConfigurationManager(
        workdir / "config.yaml", workdir / "params.yaml", workdir / "schema.yaml", overrides={"depth": 3, "fuel": None}
    )
    lr = manager.get_logical_relation_config()
    assert lr.depth == 3
    assert (lr.battery_size, lr.battery_limit) == (4, DEFAULT_PARAMS["battery"]["limit"])
    assert manager.get_adequacy_config().fuel == 100


def test_read_yaml_checks_its_argument_type():
    with pytest.raises(EnsureError):
        read_yaml(str(ROOT / "params.yaml"))
    assert read_yaml(ROOT / "params.yaml").battery.size == 8


def test_read_yaml_or_default(tmp_path):
    assert read_yaml_or_default(tmp_path / "missing.yaml", {"fuel": 1}).fuel == 1


def test_json_round_trip(tmp_path):
    save_json(path=tmp_path / "report.json", data={"summary": {"failed": 0}})
    assert load_json(tmp_path / "report.json").summary.failed == 0


def test_list_sources_is_sorted():
    assert [p.name for p in list_sources(CONTEXT_DIR, ".ctx")] == ["bool.ctx", "nat.ctx", "unit.ctx"]
    assert list_sources(Path(ROOT / "corpus"), ".ctx") == []


def test_run_jobs_keeps_input_order():
    assert run_jobs(abs, [-3, 2, -1]) == [3, 2, 1]
    assert run_jobs(abs, [-3, 2, -1], jobs=2) == [3, 2, 1]
