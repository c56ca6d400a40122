from pathlib import Path

from fpcProject import logger
from fpcProject.components.corpus_ingestion import corpus_files, load_checked
from fpcProject.constants import DEFAULT_ZERO_STEP_BOUND
from fpcProject.entity import AdequacyConfig
from fpcProject.entity.reports import AdequacyReport, StageSummary
from fpcProject.fpc.denot import Side, denote, observe
from fpcProject.fpc.errors import FuelExhausted
from fpcProject.fpc.kernel import Converged, eta
from fpcProject.fpc.meta import laws
from fpcProject.fpc.opsem import Evaluated, eval_big, zero_normalize
from fpcProject.fpc.prelude import BOOL, delayed, ifz, numeral, succ, zero
from fpcProject.fpc.surface import print_type
from fpcProject.fpc.syntax import Inl, Inr, strip_ascriptions
from fpcProject.fpc.typechecker import EMPTY_CTX, check
from fpcProject.utils.common import run_jobs, save_json

IFZ_PAIRS = 10


def _classify(value, k: int) -> tuple:
    if isinstance(value, Inl):
        return Side.LEFT, k
    if isinstance(value, Inr):
        return Side.RIGHT, k
    return "*", k


def operational_outcome(term, fuel: int):
    """``(side or '*', k)`` from the big-step evaluator, or None on timeout."""
    result = eval_big(term, fuel)
    if not isinstance(result, Evaluated):
        return None
    return _classify(result.value, result.k)


def counted_replay(term, steps: int, bound: int = DEFAULT_ZERO_STEP_BOUND):
    """Follow the run through at most ``steps + 1`` fold-unfold steps, with at most
    ``bound`` free reductions between two of them.

    Returns ``(side or '*', k)`` when a value is reached, ``("more", steps + 1)``
    when the run needs more counted steps than ``steps``, and None when the free
    reductions exceed ``bound``.
    """
    current = strip_ascriptions(term)
    for taken in range(steps + 1):
        try:
            run = zero_normalize(current, bound)
        except FuelExhausted:
            return None
        if run.pending is None:
            return _classify(run.term, taken)
        current = run.pending.term
    return "more", steps + 1


def _same(operational, denotational) -> bool:
    return (
        operational is not None
        and isinstance(denotational, Converged)
        and operational[1] == denotational.steps
        and (operational[0] == "*" or operational[0] is denotational.value)
    )


def adequacy(program, fuel: int) -> AdequacyReport:
    """Both semantics on one ground program: the same result in exactly the same number of steps."""
    denotational = observe(program.ty, denote(program.core), fuel)
    operational = operational_outcome(program.term, fuel)
    report = dict(file=program.name, type=print_type(program.ty), fuel=fuel)
    steps = denotational.steps if isinstance(denotational, Converged) else None

    if operational is None:
        if steps is None:
            return AdequacyReport(**report, status="TIMEOUT")
        # fuel budgets rule applications on one side and delay steps on the other
        operational = counted_replay(program.term, steps)
        if operational is None:
            return AdequacyReport(**report, denotational_steps=steps, status="TIMEOUT")
        if operational[0] == "more":
            logger.warning(f"{program.name}: denotation converges in {steps} steps but evaluation needs more")
            return AdequacyReport(**report, denotational_steps=steps, status="MISMATCH")
    status = "MATCH" if _same(operational, denotational) else "MISMATCH"
    return AdequacyReport(**report, operational_k=operational[1], denotational_steps=steps, status=status)


def _adequacy(args: tuple) -> dict:
    path, fuel = args
    program = load_checked(path)
    if not program.ground:
        return {"file": program.name, "status": "SKIPPED"}
    return adequacy(program, fuel).model_dump()


def _steps_both_ways(term, ty, fuel: int) -> tuple:
    operational = operational_outcome(term, fuel)
    denotational = observe(ty, denote(check(EMPTY_CTX, term, ty)), fuel)
    return (
        operational[1] if operational is not None else None,
        denotational.steps if isinstance(denotational, Converged) else None,
    )


def ifz_step_law(sampler: laws.TermSampler, pairs: int, fuel: int) -> list:
    """``ifz L M N`` takes one step more than ``M`` (``L`` zero) or ``N`` (``L`` a
    successor), plus the steps ``L`` needs to reach its fold."""
    failures = []
    for i in range(pairs):
        ty = sampler.ground_type()
        m, n = sampler.term(ty), sampler.term(ty)
        for j in (0, 1 + i % 3):
            cases = (
                (ifz(delayed(zero(), j), m, n), m),
                (ifz(delayed(succ(numeral(i % 3)), j), m, n), n),
            )
            for term, branch in cases:
                whole = _steps_both_ways(term, ty, fuel)
                part = _steps_both_ways(branch, ty, fuel)
                if whole != tuple(s + 1 + j for s in part):
                    failures.append(f"ifz law {i} (scrutinee delayed {j}): {whole} vs 1 + {j} + {part}")
    return failures


def homomorphism_laws(sampler: laws.TermSampler, instances: int, fuel: int) -> dict:
    """Randomised instances of each law; returns failure descriptions per law."""
    failures = {name: [] for name in ("unfold_fold", "case", "unfold", "ext", "reduction", "substitution")}

    def record(name, result, i):
        if not result:
            failures[name].append(f"instance {i}: {result.left} vs {result.right}")

    for i in range(instances):
        ty = sampler.ground_type()
        record("unfold_fold", laws.unfold_fold_is_delay(sampler.term(ty), fuel), i)
        record("case", laws.case_commutes_with_delay(sampler.case(ty), fuel), i)
        record("unfold", laws.unfold_commutes_with_delay(laws.folded(sampler.term(ty), ty), fuel), i)
        record("reduction", laws.reduction_preserves_denotation(sampler.term(ty), fuel), i)
        body = sampler.term(ty, scope=(("x", BOOL),))
        record("substitution", laws.substitution_lemma(body, "x", BOOL, sampler.term(BOOL), fuel), i)
        record("ext", laws.ext_adds_one_step(i, lambda a: eta(a % 7), i % 11, fuel), i)
    return failures


class Adequacy:
    def __init__(self, config: AdequacyConfig):
        self.config = config

    def evaluate(self) -> StageSummary:
        paths = corpus_files(self.config.corpus_dir)
        entries = run_jobs(_adequacy, [(p, self.config.fuel) for p in paths], self.config.jobs)
        checked = [e for e in entries if e["status"] != "SKIPPED"]
        failures = [f"{e['file']}: {e['operational_k']} vs {e['denotational_steps']}" for e in checked if e["status"] == "MISMATCH"]

        sampler = laws.TermSampler(self.config.seed)
        failures += ifz_step_law(sampler, IFZ_PAIRS, self.config.fuel)
        law_failures = homomorphism_laws(sampler, self.config.homomorphism_instances, self.config.fuel)
        for name, found in law_failures.items():
            failures += [f"{name} law, {f}" for f in found]
        for failure in failures:
            logger.warning(failure)

        summary = StageSummary(
            stage="adequacy",
            checked=len(checked),
            passed=sum(1 for e in checked if e["status"] == "MATCH"),
            failed=len(failures),
            skipped=len(entries) - len(checked) + sum(1 for e in checked if e["status"] == "TIMEOUT"),
            failures=failures,
            metrics={
                "fuel": self.config.fuel,
                "homomorphism_instances": self.config.homomorphism_instances,
                "law_failures": {name: len(found) for name, found in law_failures.items()},
            },
        )
        save_json(path=Path(self.config.report_file), data={"programs": entries, "summary": summary.model_dump()})
        return summary
