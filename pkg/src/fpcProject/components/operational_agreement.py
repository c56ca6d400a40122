from pathlib import Path

from fpcProject import logger
from fpcProject.components.corpus_ingestion import corpus_files, load_checked
from fpcProject.entity import OperationalAgreementConfig
from fpcProject.entity.reports import StageSummary
from fpcProject.fpc.errors import TypeCheckError
from fpcProject.fpc.opsem import NORMAL_FORM, EvalTimeout, eval_big, eval_small, step
from fpcProject.fpc.syntax import alpha_eq, is_value
from fpcProject.fpc.typechecker import EMPTY_CTX, check, erase
from fpcProject.utils.common import run_jobs, save_json

SUBJECT_REDUCTION_STEPS = 200


def subject_reduction(program, steps: int = SUBJECT_REDUCTION_STEPS) -> str:
    """Follow up to ``steps`` reductions of the ascription-annotated program,
    re-checking every reduct at the program's type. Returns a failure message or ''."""
    current = erase(program.core, ascribe=True)
    for n in range(steps):
        reduct = step(current)
        if reduct is NORMAL_FORM:
            if not is_value(current):
                return f"normal form after {n} steps is not a value"
            return ""
        current = reduct.term
        try:
            check(EMPTY_CTX, current, program.ty)
        except TypeCheckError as e:
            return f"reduct {n + 1} ({reduct.rule}) does not type check: {e}"
    return ""


def compare(path: Path, fuel: int) -> dict:
    """Big-step vs small-step on one program: same value up to alpha, same k."""
    program = load_checked(path)
    big = eval_big(program.term, fuel)
    small = eval_small(program.term, fuel, record_trace=False)
    entry = {"file": program.name, "failure": subject_reduction(program)}

    if isinstance(big, EvalTimeout) or isinstance(small, EvalTimeout):
        entry["status"] = "timeout"
        if isinstance(big, EvalTimeout) != isinstance(small, EvalTimeout):
            # the two fuel measures differ, so one side may still finish
            logger.info(f"{program.name}: only one evaluator timed out")
        return entry

    entry.update(big_k=big.k, small_k=small.k)
    if big.k != small.k:
        entry["failure"] = entry["failure"] or f"k differs: big {big.k}, small {small.k}"
    elif not alpha_eq(big.value, small.value):
        entry["failure"] = entry["failure"] or "values differ"
    entry["status"] = "failed" if entry["failure"] else "agree"
    return entry


def _compare(args: tuple) -> dict:
    return compare(*args)


class OperationalAgreement:
    def __init__(self, config: OperationalAgreementConfig):
        self.config = config

    def evaluate(self) -> StageSummary:
        paths = corpus_files(self.config.corpus_dir)
        entries = run_jobs(_compare, [(p, self.config.fuel) for p in paths], self.config.jobs)

        failures = [f"{e['file']}: {e['failure']}" for e in entries if e["failure"]]
        skipped = sum(1 for e in entries if e["status"] == "timeout" and not e["failure"])
        for failure in failures:
            logger.warning(failure)

        summary = StageSummary(
            stage="operational_agreement",
            checked=len(entries),
            passed=len(entries) - len(failures) - skipped,
            failed=len(failures),
            skipped=skipped,
            failures=failures,
            metrics={"fuel": self.config.fuel},
        )
        save_json(path=Path(self.config.report_file), data={"programs": entries, "summary": summary.model_dump()})
        return summary
