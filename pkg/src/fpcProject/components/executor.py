from pathlib import Path

from fpcProject import logger
from fpcProject.components.adequacy import operational_outcome
from fpcProject.components.corpus_ingestion import corpus_files, load_checked
from fpcProject.entity import ExecutorConfig
from fpcProject.entity.reports import ExecReport, StageSummary
from fpcProject.fpc.denot import denote, ground_delay
from fpcProject.fpc.meta.executor import Done, exec_
from fpcProject.fpc.syntax import TSum
from fpcProject.utils.common import run_jobs, save_json


def exec_report(file: str, n: int, result) -> ExecReport:
    return ExecReport(file=file, n=n, result=result.side.value if isinstance(result, Done) else "more")


def executor_agreement(args: tuple) -> dict:
    """``exec n [[M]]`` decides a side exactly when ``M`` evaluates to it within ``n`` counted steps."""
    path, exec_max, fuel = args
    program = load_checked(path)
    if not isinstance(program.ty, TSum):
        return {"file": program.name, "status": "skipped", "failure": ""}

    outcome = operational_outcome(program.term, fuel)
    delay = ground_delay(denote(program.core))
    entry = {"file": program.name, "status": "checked", "failure": "", "k": outcome[1] if outcome else None}
    for n in range(exec_max + 1):
        result = exec_(n, delay)
        expected_done = outcome is not None and outcome[1] <= n
        if isinstance(result, Done) != expected_done:
            entry["failure"] = f"n={n}: exec gave {exec_report(program.name, n, result).result}, k={entry['k']}"
            break
        if expected_done and result.side is not outcome[0]:
            entry["failure"] = f"n={n}: exec decided {result.side.value}, evaluation gave {outcome[0].value}"
            break
    return entry


class Executor:
    def __init__(self, config: ExecutorConfig):
        self.config = config

    def evaluate(self) -> StageSummary:
        c = self.config
        paths = corpus_files(c.corpus_dir)
        entries = run_jobs(executor_agreement, [(p, c.exec_max, c.fuel) for p in paths], c.jobs)

        checked = [e for e in entries if e["status"] == "checked"]
        failures = [f"{e['file']}: {e['failure']}" for e in checked if e["failure"]]
        for failure in failures:
            logger.warning(failure)

        summary = StageSummary(
            stage="executor",
            checked=len(checked),
            passed=len(checked) - len(failures),
            failed=len(failures),
            skipped=len(entries) - len(checked),
            failures=failures,
            metrics={"exec_max": c.exec_max},
        )
        save_json(path=Path(c.report_file), data={"programs": entries, "summary": summary.model_dump()})
        return summary
