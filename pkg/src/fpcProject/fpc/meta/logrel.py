"""Depth-indexed logical relation between denotations and closed terms.

``logrel(ty, d, M, n)`` relates a semantic value ``d`` of ``ty`` to a term
``M``:

- unit and sum values available now require ``M`` to reach the matching
  introduction form by free steps;
- a delayed value requires ``M ->*0 M' ->1 M''`` and continues one depth
  lower against ``M''``;
- products are related componentwise through ``fst``/``snd``;
- functions map related battery arguments to related results;
- recursive values require ``unfold M ->*0 M' ->1 M''`` and continue one
  depth lower at the unfolded type.
"""

from fpcProject import logger
from fpcProject.constants import DEFAULT_ZERO_STEP_BOUND
from fpcProject.fpc.denot import DLater, SemVal, Side
from fpcProject.fpc.kernel import Now
from fpcProject.fpc.meta.battery import Battery
from fpcProject.fpc.meta.verdict import Verdict, fails_at, holds_at
from fpcProject.fpc.opsem import zero_normalize
from fpcProject.fpc.syntax import (
    App,
    Fst,
    Inl,
    Inr,
    Snd,
    TArrow,
    Term,
    TMu,
    TProd,
    TSum,
    TUnit,
    Type,
    Unfold,
    UnitVal,
    strip_ascriptions,
    unfold_mu,
)


class LogicalRelation:
    def __init__(self, battery: Battery = None, zero_step_bound: int = DEFAULT_ZERO_STEP_BOUND):
        self.battery = battery or Battery()
        self.zero_step_bound = zero_step_bound

    def check(self, ty: Type, value: SemVal, term: Term, depth: int) -> Verdict:
        return self._rel(ty, value, strip_ascriptions(term), depth)

    def _rel(self, ty: Type, value: SemVal, term: Term, n: int) -> Verdict:
        if n == 0:
            return holds_at(0)
        match ty:
            case TUnit() | TSum():
                return self._ground(ty, value.delay, term, n)
            case TProd(left, right):
                first = self._rel(left, value.first, Fst(term), n)
                if not first:
                    return first.under("fst").at(n)
                return self._rel(right, value.second, Snd(term), n).under("snd").at(n)
            case TArrow(dom, cod):
                for i, (arg, arg_term) in enumerate(self.battery.logrel_pairs(dom)):
                    if not self._rel(dom, arg, arg_term, n):
                        continue
                    verdict = self._rel(cod, value.fn(arg), App(term, arg_term), n)
                    if not verdict:
                        return verdict.under(f"arg[{i}]").at(n)
                return holds_at(n)
            case TMu():
                assert isinstance(value, DLater)
                run = zero_normalize(Unfold(term), self.zero_step_bound)
                if run.pending is None:
                    return fails_at(n, "unfold of the term reaches a value without a fold-unfold step").under("unfold")
                if n == 1:
                    return holds_at(n)
                inner = self._rel(unfold_mu(ty), value.later.force(), run.pending.term, n - 1)
                return inner.under("unfold").at(n)
        raise TypeError(f"logrel needs a closed type, got {ty!r}")

    def _ground(self, ty: Type, delay, term: Term, n: int) -> Verdict:
        run = zero_normalize(term, self.zero_step_bound)
        if isinstance(delay, Now):
            if run.pending is not None:
                return fails_at(n, "value available now but the term needs a fold-unfold step")
            if isinstance(ty, TUnit):
                if isinstance(run.term, UnitVal):
                    return holds_at(n)
                return fails_at(n, "term does not reduce to ()")
            injection = delay.value
            expected = Inl if injection.side is Side.LEFT else Inr
            if not isinstance(run.term, expected):
                return fails_at(n, f"term does not reduce to {injection.side.value}")
            side_ty = ty.left if injection.side is Side.LEFT else ty.right
            return self._rel(side_ty, injection.value, run.term.arg, n).under(injection.side.value).at(n)
        if run.pending is None:
            return fails_at(n, "delayed value but the term reaches a value without a fold-unfold step")
        if n == 1:
            return holds_at(n)
        inner = self._ground(ty, delay.later.force(), run.pending.term, n - 1)
        return inner.under("later").at(n)


def logrel(
    ty: Type, value: SemVal, term: Term, depth: int, battery: Battery = None, zero_step_bound: int = DEFAULT_ZERO_STEP_BOUND
) -> Verdict:
    verdict = LogicalRelation(battery, zero_step_bound).check(ty, value, term, depth)
    if not verdict:
        logger.warning(f"logical relation {verdict.describe()}")
    return verdict
