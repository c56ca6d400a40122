import json
import shutil

import pytest

from fpcProject import cli
from fpcProject.cli import main
from fpcProject.constants import EXIT_CHECK_FAILED, EXIT_OK, EXIT_TIMEOUT, EXIT_USAGE

from conftest import CONTEXT_DIR, GOLDEN_DIR


def _golden(name: str) -> dict:
    return json.loads((GOLDEN_DIR / name).read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_check(repo_root, capsys):
    code, out, _ = run(capsys, "check", "corpus/two_unfolds.fpc")
    assert code == EXIT_OK
    assert out.strip() == "1"


def test_check_core(repo_root, capsys):
    code, out, _ = run(capsys, "check", "--core", "corpus/true.fpc")
    assert code == EXIT_OK
    assert out.splitlines()[1:] == ["Inl : 1 + 1", "  Unit : 1"]


def test_check_json(repo_root, capsys):
    code, out, _ = run(capsys, "check", "--json", "corpus/true.fpc")
    assert code == EXIT_OK
    assert json.loads(out) == _golden("check_true.json")


def test_run_reports_value_and_k(repo_root, capsys):
    code, out, _ = run(capsys, "run", "corpus/two_unfolds.fpc")
    assert code == EXIT_OK
    assert out.splitlines() == ["()", "k=2"]


def test_run_trace(repo_root, capsys):
    code, out, _ = run(capsys, "run", "--trace", "--json", "corpus/two_unfolds.fpc")
    report = json.loads(out)
    assert code == EXIT_OK
    assert (report["mode"], report["k"], report["trace"]["k"]) == ("small", 2, 2)
    assert [s["kind"] for s in report["trace"]["steps"]] == [1, 1]


def test_run_divergence_times_out(repo_root, capsys):
    code, out, _ = run(capsys, "run", "--fuel", "300", "corpus/diverge.fpc")
    assert code == EXIT_TIMEOUT
    assert out.strip() == "Timeout (fuel 300)"


def test_denote(repo_root, capsys):
    code, out, _ = run(capsys, "denote", "corpus/true_after_3.fpc")
    assert (code, out.strip()) == (EXIT_OK, "inl steps=3")
    code, out, _ = run(capsys, "denote", "--json", "corpus/two_unfolds.fpc")
    assert json.loads(out) == _golden("denote_two_unfolds.json")


def test_denote_needs_a_ground_type(repo_root, capsys):
    code, _, err = run(capsys, "denote", "corpus/not_fn.fpc")
    assert code == EXIT_USAGE
    assert "observable" in err


def test_adequacy(repo_root, capsys):
    code, out, _ = run(capsys, "adequacy", "corpus/true_after_3.fpc")
    assert (code, out.strip()) == (EXIT_OK, "operational k=3, denotational steps=3, MATCH")
    code, out, _ = run(capsys, "adequacy", "--json", "corpus/true_after_3.fpc")
    assert json.loads(out) == _golden("adequacy_true_after_3.json")


def test_bisim(repo_root, capsys):
    code, out, _ = run(capsys, "bisim", "corpus/true.fpc", "corpus/true_after_3.fpc")
    assert (code, out.strip()) == (EXIT_OK, "HoldsAt(50)")
    code, out, _ = run(capsys, "bisim", "--json", "corpus/true.fpc", "corpus/false.fpc")
    assert code == EXIT_CHECK_FAILED
    assert json.loads(out) == _golden("bisim_true_false.json")


def test_bisim_depth_defaults_to_params_depth(repo_root, capsys, params):
    code, out, _ = run(capsys, "bisim", "--json", "corpus/true.fpc", "corpus/true_after_3.fpc")
    assert code == EXIT_OK
    assert json.loads(out)["depth"] == params.depth == 50
    _, out, _ = run(capsys, "bisim", "--depth", "7", "corpus/true.fpc", "corpus/true_after_3.fpc")
    assert out.strip() == "HoldsAt(7)"


def test_bisim_rejects_different_types(repo_root, capsys):
    code, _, err = run(capsys, "bisim", "corpus/unit.fpc", "corpus/true.fpc")
    assert code == EXIT_USAGE
    assert "types differ" in err


def test_exec(repo_root, capsys):
    code, out, _ = run(capsys, "exec", "--fuel", "2", "corpus/true_after_3.fpc")
    assert (code, out.strip()) == (EXIT_TIMEOUT, "More (not yet decided)")
    code, out, _ = run(capsys, "exec", "--fuel", "3", "corpus/true_after_3.fpc")
    assert (code, out.strip()) == (EXIT_OK, "inl (true)")
    code, out, _ = run(capsys, "exec", "--fuel", "3", "--json", "corpus/true_after_3.fpc")
    assert json.loads(out) == _golden("exec_true_after_3_n3.json")


def test_exec_needs_a_sum_type(repo_root, capsys):
    code, _, _ = run(capsys, "exec", "corpus/unit.fpc")
    assert code == EXIT_USAGE


def test_ctx_equiv_picks_the_suite_for_the_type(repo_root, capsys):
    code, out, _ = run(capsys, "ctx-equiv", "corpus/true.fpc", "corpus/true_after_3.fpc")
    assert (code, out.strip()) == (EXIT_OK, "agree 30 / unknown 0 / ill-typed 0")


def test_ctx_equiv_with_a_file(repo_root, capsys):
    code, out, _ = run(capsys, "ctx-equiv", "--contexts", "contexts/unit.ctx", "corpus/unit.fpc", "corpus/two_unfolds.fpc")
    assert (code, out.strip()) == (EXIT_OK, "agree 30 / unknown 0 / ill-typed 0")


def test_ctx_equiv_reports_timeouts(repo_root, capsys):
    code, out, _ = run(
        capsys, "ctx-equiv", "--fuel", "300", "--contexts", "contexts/unit.ctx", "corpus/unit.fpc", "corpus/diverge.fpc"
    )
    assert code == EXIT_TIMEOUT
    assert "unknown" in out


def test_ctx_equiv_fails_when_the_chosen_suite_has_ill_typed_contexts(repo_root, capsys):
    code, out, err = run(capsys, "ctx-equiv", "--contexts", "contexts/unit.ctx", "corpus/true.fpc", "corpus/false.fpc")
    assert code == EXIT_CHECK_FAILED
    assert out.strip() == "agree 2 / unknown 0 / ill-typed 28"
    assert "warning: 28 of 30 contexts" in err


def test_ctx_equiv_only_warns_for_unmatched_directories(repo_root, tmp_path, capsys):
    shutil.copy(CONTEXT_DIR / "unit.ctx", tmp_path)
    shutil.copy(CONTEXT_DIR / "bool.ctx", tmp_path / "extra.ctx")
    code, out, err = run(capsys, "ctx-equiv", "--contexts", str(tmp_path), "corpus/true.fpc", "corpus/true_after_3.fpc")
    assert code == EXIT_OK
    assert out.strip() == "agree 32 / unknown 0 / ill-typed 28"
    assert "warning:" in err


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["run"],
        ["run", "--fuel", "-1", "corpus/unit.fpc"],
        ["check", "corpus/does_not_exist.fpc"],
    ],
)
def test_usage_errors(repo_root, capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == EXIT_USAGE


def test_parse_errors_are_usage_errors(tmp_path, capsys):
    source = tmp_path / "bad.fpc"
    source.write_text("fn x : 1 =>")
    code, _, err = run(capsys, "check", str(source))
    assert code == EXIT_USAGE
    assert "error: 1:" in err


def test_type_errors_are_usage_errors(tmp_path, capsys):
    source = tmp_path / "bad.fpc"
    source.write_text("unfold ()")
    code, _, err = run(capsys, "run", str(source))
    assert code == EXIT_USAGE
    assert "recursive type" in err


def test_deep_nesting_exits_with_a_usage_error(repo_root, capsys, monkeypatch):
    def too_deep(*args):
        raise RecursionError("maximum recursion depth exceeded")

    monkeypatch.setattr(cli, "denote", too_deep)
    code, _, err = run(capsys, "denote", "corpus/true.fpc")
    assert code == EXIT_USAGE
    assert "nested too deeply" in err
