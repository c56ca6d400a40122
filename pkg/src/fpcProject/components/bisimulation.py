from pathlib import Path

from fpcProject import logger
from fpcProject.components.corpus_ingestion import corpus_files, load_checked
from fpcProject.entity import BisimulationConfig
from fpcProject.entity.reports import StageSummary
from fpcProject.fpc.denot import STAR, DFun, DUnit, delay_sem, denote
from fpcProject.fpc.kernel import Now, bottom, delay_n, eta
from fpcProject.fpc.meta.battery import Battery
from fpcProject.fpc.meta.bisim import Bisimulation, lift_rel
from fpcProject.fpc.meta.verdict import Verdict, fails_at, holds_at
from fpcProject.fpc.syntax import UNIT, TArrow
from fpcProject.utils.common import run_jobs, save_json

DELAY_BOUND = 20
BOTTOM_DEPTH = 100


def _eq(a, b, n: int) -> Verdict:
    return holds_at(n) if a == b else fails_at(n, f"{a!r} vs {b!r}")


def not_reflexive_fn() -> DFun:
    """At ``1 -> 1``: a value available now goes to itself, a delayed one to bottom."""
    return DFun(lambda x: DUnit(eta(STAR)) if isinstance(x.delay, Now) else DUnit(bottom()))


def delay_suite(depth_bound: int = DELAY_BOUND, bottom_depth: int = BOTTOM_DEPTH) -> list:
    """The fixed bisimulation facts about delays; returns failure descriptions."""
    failures = []
    for a in range(depth_bound + 1):
        for b in range(depth_bound + 1):
            n = max(a, b) + 1
            if not lift_rel(_eq, delay_n(eta(STAR), a), delay_n(eta(STAR), b), n):
                failures.append(f"delta^{a} eta vs delta^{b} eta at depth {n}")
    for n in range(bottom_depth + 1):
        if not lift_rel(_eq, bottom(), bottom(), n):
            failures.append(f"bottom vs bottom at depth {n}")
    for n in range(1, bottom_depth + 1):
        if lift_rel(_eq, eta(STAR), bottom(), n):
            failures.append(f"eta vs bottom holds at depth {n}")
    f = not_reflexive_fn()
    if Bisimulation(Battery()).check(TArrow(UNIT, UNIT), f, f, 2):
        failures.append("the delay-sensitive function at 1 -> 1 was found reflexive")
    return failures


def reflexivity(args: tuple) -> dict:
    """``[[M]] ~ [[M]]``, symmetry against ``delta [[M]]``, and delta-insensitivity."""
    path, depth, battery_size, battery_limit = args
    program = load_checked(path)
    relation = Bisimulation(Battery(battery_size, battery_limit))
    ty = program.ty
    entry = {"file": program.name, "failure": ""}

    verdict = relation.check(ty, denote(program.core), denote(program.core), depth)
    if not verdict:
        entry["failure"] = f"reflexivity: {verdict.describe()}"
        return entry

    value = denote(program.core)
    forward = relation.check(ty, value, delay_sem(ty, value), depth)
    backward = relation.check(ty, delay_sem(ty, value), value, depth)
    if forward.label != backward.label:
        entry["failure"] = f"symmetry: {forward.describe()} vs {backward.describe()}"
    elif not forward:
        entry["failure"] = f"delta-insensitivity: {forward.describe()}"
    return entry


class BisimulationCheck:
    def __init__(self, config: BisimulationConfig):
        self.config = config

    def evaluate(self) -> StageSummary:
        c = self.config
        paths = corpus_files(c.corpus_dir)
        entries = run_jobs(reflexivity, [(p, c.depth, c.battery_size, c.battery_limit) for p in paths], c.jobs)

        failures = [f"{e['file']}: {e['failure']}" for e in entries if e["failure"]]
        failures += delay_suite()
        for failure in failures:
            logger.warning(failure)

        summary = StageSummary(
            stage="bisimulation",
            checked=len(entries),
            passed=len(entries) - sum(1 for e in entries if e["failure"]),
            failed=len(failures),
            failures=failures,
            metrics={"depth": c.depth},
        )
        save_json(path=Path(c.report_file), data={"programs": entries, "summary": summary.model_dump()})
        return summary
