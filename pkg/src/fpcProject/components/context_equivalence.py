from pathlib import Path

from fpcProject import logger
from fpcProject.entity import ContextEquivalenceConfig
from fpcProject.entity.reports import StageSummary
from fpcProject.fpc.denot import denote
from fpcProject.fpc.meta.battery import Battery
from fpcProject.fpc.meta.bisim import bisim
from fpcProject.fpc.meta.contexts import Context, ctx_equiv_suite
from fpcProject.fpc.surface import load_context_suite, parse_term, parse_type, print_type
from fpcProject.fpc.syntax import canonical_type
from fpcProject.fpc.typechecker import EMPTY_CTX, check
from fpcProject.utils.common import save_json
from fpcProject.utils.reporting import suite_report, verdict_report


def load_contexts(path: Path) -> list:
    return [Context(term) for term in load_context_suite(Path(path)).contexts]


class ContextEquivalence:
    """Bisimilar pairs must agree on every context of the suite for their type."""

    def __init__(self, config: ContextEquivalenceConfig):
        self.config = config
        self.suites = {canonical_type(parse_type(ty)): name for ty, name in config.suites.items()}

    def suite_for(self, ty) -> Path:
        name = self.suites.get(canonical_type(ty))
        if name is None:
            raise KeyError(f"no context suite configured for {print_type(ty)}")
        return self.config.context_dir / name

    def check_pair(self, pair: dict) -> dict:
        ty = parse_type(pair["type"])
        left, right = parse_term(pair["left"]), parse_term(pair["right"])
        verdict = bisim(ty, denote(check(EMPTY_CTX, left, ty)), denote(check(EMPTY_CTX, right, ty)), self.config.depth, Battery())
        result = ctx_equiv_suite(left, right, load_contexts(self.suite_for(ty)), self.config.fuel, hole_ty=ty)
        entry = {
            "bisim": verdict_report("bisim", ty, verdict).model_dump(),
            "suite": suite_report(pair["left"], pair["right"], ty, self.config.fuel, result).model_dump(),
            "failure": "",
        }
        if verdict and not result.all_agree:
            entry["failure"] = f"{pair['left']} / {pair['right']}: {result.agreed} of {len(result.outcomes)} contexts agree"
        elif not verdict:
            entry["failure"] = f"{pair['left']} / {pair['right']}: not bisimilar ({verdict.describe()})"
        return entry

    def evaluate(self) -> StageSummary:
        entries = [self.check_pair(pair) for pair in self.config.pairs]
        failures = [e["failure"] for e in entries if e["failure"]]
        for failure in failures:
            logger.warning(failure)

        summary = StageSummary(
            stage="context_equivalence",
            checked=len(entries),
            passed=len(entries) - len(failures),
            failed=len(failures),
            failures=failures,
            metrics={"fuel": self.config.fuel, "depth": self.config.depth},
        )
        save_json(path=Path(self.config.report_file), data={"pairs": entries, "summary": summary.model_dump()})
        return summary
