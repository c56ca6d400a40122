"""Program contexts, their typing, and the contextual-equivalence test suite."""

from dataclasses import dataclass, field

from fpcProject import logger
from fpcProject.fpc.errors import TypeCheckError
from fpcProject.fpc.opsem import EvalTimeout, eval_big
from fpcProject.fpc.syntax import (
    UNIT,
    App,
    Ascribe,
    Case,
    Fold,
    Fst,
    Hole,
    Inl,
    Inr,
    Lam,
    Pair,
    Snd,
    Term,
    Type,
    Unfold,
    UnitVal,
    Var,
    count_holes,
)
from fpcProject.fpc.typechecker import EMPTY_CTX, HoleSpec, TermCtx, check


@dataclass(frozen=True)
class Context:
    """A term with exactly one hole ``[-]``."""

    term: Term

    def __post_init__(self):
        holes = count_holes(self.term)
        if holes != 1:
            raise ValueError(f"a context needs exactly one hole, found {holes}")


def fill(context: Context, term: Term) -> Term:
    """Plug ``term`` into the hole. Binders above the hole may capture its free variables."""
    return _plug(context.term, term)


def _plug(c: Term, term: Term) -> Term:
    match c:
        case Hole():
            return term
        case Var() | UnitVal():
            return c
        case Pair(a, b):
            return Pair(_plug(a, term), _plug(b, term))
        case Fst(a):
            return Fst(_plug(a, term))
        case Snd(a):
            return Snd(_plug(a, term))
        case Inl(a):
            return Inl(_plug(a, term))
        case Inr(a):
            return Inr(_plug(a, term))
        case Fold(a):
            return Fold(_plug(a, term))
        case Unfold(a):
            return Unfold(_plug(a, term))
        case App(f, a):
            return App(_plug(f, term), _plug(a, term))
        case Ascribe(a, ty):
            return Ascribe(_plug(a, term), ty)
        case Lam(var, ty, body):
            return Lam(var, ty, _plug(body, term))
        case Case(s, x1, left, x2, right):
            return Case(_plug(s, term), x1, _plug(left, term), x2, _plug(right, term))
    raise TypeError(f"Unexpected term: {c!r}")


def ctx_check(context: Context, gamma: TermCtx, hole_ty: Type, delta: TermCtx, result_ty: Type) -> bool:
    """``C : (gamma, hole_ty) -> (delta, result_ty)``. The bindings at the hole
    must include every binding of ``gamma``."""
    try:
        check(delta, context.term, result_ty, hole=HoleSpec(gamma, hole_ty))
    except TypeCheckError as e:
        logger.info(f"context does not type check: {e}")
        return False
    return True


@dataclass(frozen=True)
class ContextOutcome:
    index: int
    status: str  # agree | unknown | ill-typed
    left_steps: int = None
    right_steps: int = None
    timed_out: tuple = ()


@dataclass
class SuiteResult:
    outcomes: list = field(default_factory=list)

    @property
    def agreed(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "agree")

    @property
    def unknown(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "unknown")

    @property
    def ill_typed(self) -> int:
        return sum(1 for o in self.outcomes if o.status == "ill-typed")

    @property
    def all_agree(self) -> bool:
        return all(o.status == "agree" for o in self.outcomes)


def ctx_equiv_suite(left: Term, right: Term, contexts: list, fuel: int, hole_ty: Type = None) -> SuiteResult:
    """Run both fills of every context with ``eval_big``. Contexts have result
    type 1, so two converging runs agree; a timeout on either side is unknown."""
    result = SuiteResult()
    for i, context in enumerate(contexts):
        if hole_ty is not None and not ctx_check(context, EMPTY_CTX, hole_ty, EMPTY_CTX, UNIT):
            result.outcomes.append(ContextOutcome(i, "ill-typed"))
            continue
        runs = [eval_big(fill(context, term), fuel) for term in (left, right)]
        timed_out = tuple(side for side, run in zip(("left", "right"), runs) if isinstance(run, EvalTimeout))
        if timed_out:
            logger.info(f"context {i}: timeout on {', '.join(timed_out)}")
            result.outcomes.append(ContextOutcome(i, "unknown", timed_out=timed_out))
            continue
        result.outcomes.append(ContextOutcome(i, "agree", runs[0].k, runs[1].k))
    return result
