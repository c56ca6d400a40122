"""Weak bisimulation of denotations, built on the lifting of relations to delays."""

from typing import Callable

from fpcProject import logger
from fpcProject.fpc.denot import DLater, Injection, SemVal
from fpcProject.fpc.kernel import Delay, Now, Step
from fpcProject.fpc.meta.battery import Battery
from fpcProject.fpc.meta.verdict import Verdict, fails_at, holds_at
from fpcProject.fpc.syntax import TArrow, TMu, TProd, TSum, TUnit, Type, unfold_mu

Relation = Callable[[object, object, int], Verdict]


def _search(other: Delay, n: int):
    """Unroll ``other`` looking for a value; each Step costs one depth."""
    taken = 0
    while isinstance(other, Step):
        if taken == n:
            return None, taken
        other = other.later.force()
        taken += 1
    return other.value, taken


def lift_rel(rel: Relation, left: Delay, right: Delay, n: int) -> Verdict:
    """``left L(rel) right`` at depth ``n``."""
    depth = n
    while True:
        if n == 0:
            return holds_at(0)
        if isinstance(left, Now) and isinstance(right, Now):
            return rel(left.value, right.value, n).at(depth)
        if isinstance(left, Now) or isinstance(right, Now):
            now_left = isinstance(left, Now)
            found, taken = _search(right if now_left else left, n)
            if taken == n and found is None:
                side = "right" if now_left else "left"
                return fails_at(depth, f"no value on the {side} within {n} steps", conclusive=False)
            if taken == n:
                return holds_at(depth)
            pair = (left.value, found) if now_left else (found, right.value)
            return rel(pair[0], pair[1], n - taken).at(depth)
        # both delayed: the suspensions are related one depth later
        if n == 1:
            return holds_at(depth)
        left, right = left.later.force(), right.later.force()
        n -= 1


def _unit_eq(a, b, n: int) -> Verdict:
    return holds_at(n) if a == b else fails_at(n, f"unit tokens differ: {a!r} vs {b!r}")


class Bisimulation:
    def __init__(self, battery: Battery = None):
        self.battery = battery or Battery()

    def check(self, ty: Type, left: SemVal, right: SemVal, n: int) -> Verdict:
        if n == 0:
            return holds_at(0)
        match ty:
            case TUnit():
                return lift_rel(_unit_eq, left.delay, right.delay, n)
            case TSum(l_ty, r_ty):

                def sum_rel(a: Injection, b: Injection, m: int) -> Verdict:
                    if a.side is not b.side:
                        return fails_at(m, f"{a.side.value} vs {b.side.value}")
                    side_ty = l_ty if a.side.value == "inl" else r_ty
                    return self.check(side_ty, a.value, b.value, m).under(a.side.value)

                return lift_rel(sum_rel, left.delay, right.delay, n)
            case TProd(l_ty, r_ty):
                first = self.check(l_ty, left.first, right.first, n)
                if not first:
                    return first.under("fst").at(n)
                return self.check(r_ty, left.second, right.second, n).under("snd").at(n)
            case TArrow(dom, cod):
                for i, (x, y) in enumerate(self.battery.bisim_pairs(dom)):
                    if not self.check(dom, x, y, n):
                        continue
                    verdict = self.check(cod, left.fn(x), right.fn(y), n)
                    if not verdict:
                        return verdict.under(f"arg[{i}]").at(n)
                return holds_at(n)
            case TMu():
                assert isinstance(left, DLater) and isinstance(right, DLater)
                if n == 1:
                    return holds_at(1)
                inner = self.check(unfold_mu(ty), left.later.force(), right.later.force(), n - 1)
                return inner.under("unfold").at(n)
        raise TypeError(f"bisim needs a closed type, got {ty!r}")


def bisim(ty: Type, left: SemVal, right: SemVal, depth: int, battery: Battery = None) -> Verdict:
    verdict = Bisimulation(battery).check(ty, left, right, depth)
    if not verdict:
        logger.warning(f"bisimulation {verdict.describe()}")
    return verdict
