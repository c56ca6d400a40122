from pathlib import Path

from fpcProject import logger
from fpcProject.components.corpus_ingestion import corpus_files, load_checked
from fpcProject.entity import LogicalRelationConfig
from fpcProject.entity.reports import StageSummary
from fpcProject.fpc.denot import denote
from fpcProject.fpc.errors import FuelExhausted
from fpcProject.fpc.meta.battery import Battery
from fpcProject.fpc.meta.logrel import LogicalRelation
from fpcProject.fpc.meta.verdict import antitone
from fpcProject.utils.common import run_jobs, save_json
from fpcProject.utils.reporting import verdict_report


def fundamental_lemma(args: tuple) -> dict:
    """``logrel(ty, [[M]], M, n)`` for every ``n`` up to the configured depth."""
    path, depth, zero_step_bound, battery_size, battery_limit = args
    program = load_checked(path)
    relation = LogicalRelation(Battery(battery_size, battery_limit), zero_step_bound)
    value = denote(program.core)
    verdicts = {}

    def run(n: int):
        verdicts[n] = relation.check(program.ty, value, program.term, n)
        return verdicts[n]

    try:
        monotone = antitone(run, depth)
    except FuelExhausted as e:
        return {"file": program.name, "failure": str(e)}

    failing = [n for n, v in verdicts.items() if not v]
    entry = {"file": program.name, "failure": ""}
    if failing:
        first = verdicts[failing[0]]
        entry["failure"] = f"depth {failing[0]}: {first.describe()}"
        entry["verdict"] = verdict_report("logrel", program.ty, first).model_dump()
    elif not monotone:
        entry["failure"] = "verdicts are not antitone in depth"
    return entry


class LogicalRelationCheck:
    def __init__(self, config: LogicalRelationConfig):
        self.config = config

    def evaluate(self) -> StageSummary:
        c = self.config
        paths = corpus_files(c.corpus_dir)
        args = [(p, c.depth, c.zero_step_bound, c.battery_size, c.battery_limit) for p in paths]
        entries = run_jobs(fundamental_lemma, args, c.jobs)

        failures = [f"{e['file']}: {e['failure']}" for e in entries if e["failure"]]
        for failure in failures:
            logger.warning(failure)

        summary = StageSummary(
            stage="logical_relation",
            checked=len(entries),
            passed=len(entries) - len(failures),
            failed=len(failures),
            failures=failures,
            metrics={"depth": c.depth, "battery_size": c.battery_size},
        )
        save_json(path=Path(c.report_file), data={"programs": entries, "summary": summary.model_dump()})
        return summary
