"""Observational checks of the equations relating syntax, steps and delays.

Each check denotes both sides, observes them at a ground type with the given
fuel, and compares value and step count.
"""

import random
from dataclasses import dataclass
from typing import Any, Callable

from fpcProject.fpc.denot import delay_sem, denote, observe, tick
from fpcProject.fpc.kernel import Converged, Timeout, delay_n, eta, ext, force, step_l
from fpcProject.fpc.meta.bisim import bisim
from fpcProject.fpc.meta.verdict import Verdict
from fpcProject.fpc.opsem import NORMAL_FORM, step
from fpcProject.fpc.prelude import BOOL, delayed
from fpcProject.fpc.syntax import (
    UNIT,
    UNIT_VAL,
    App,
    Ascribe,
    Case,
    Fold,
    Fst,
    Inl,
    Inr,
    Lam,
    Pair,
    Snd,
    Term,
    TMu,
    TSum,
    TUnit,
    Type,
    Unfold,
    Var,
    subst_term,
    unfold_mu,
)
from fpcProject.fpc.typechecker import EMPTY_CTX, TermCtx, check, elaborate, erase


@dataclass(frozen=True)
class LawResult:
    holds: bool
    left: Any
    right: Any
    description: str = ""

    def __bool__(self) -> bool:
        return self.holds


def _shifted(result, extra: int):
    if isinstance(result, Converged):
        return Converged(result.value, result.steps + extra)
    return result


def _same(left, right) -> bool:
    if isinstance(left, Timeout) or isinstance(right, Timeout):
        return isinstance(left, Timeout) and isinstance(right, Timeout)
    return left == right


def _ground(ty: Type) -> None:
    if not isinstance(ty, (TUnit, TSum)):
        raise TypeError("law checks observe unit or sum types only")


def unfold_fold_is_delay(term: Term, fuel: int) -> LawResult:
    """``[[unfold (fold M)]]`` observes as ``delta [[M]]``."""
    core = elaborate(EMPTY_CTX, term)
    _ground(core.ty)
    wrapped = check(EMPTY_CTX, Unfold(Fold(term)), core.ty)
    plain = observe(core.ty, denote(core), fuel)
    observed = observe(core.ty, denote(wrapped), fuel + 1)
    return LawResult(_same(_shifted(plain, 1), observed), _shifted(plain, 1), observed, "unfold (fold M) = delta M")


def case_commutes_with_delay(case_term: Case, fuel: int) -> LawResult:
    """``case`` is a homomorphism: delaying the scrutinee delays the whole case."""
    core = elaborate(EMPTY_CTX, case_term)
    _ground(core.ty)
    slow = Case(delayed(case_term.scrutinee, 1), case_term.left_var, case_term.left, case_term.right_var, case_term.right)
    expected = observe(core.ty, delay_sem(core.ty, denote(core)), fuel + 1)
    observed = observe(core.ty, denote(check(EMPTY_CTX, slow, core.ty)), fuel + 1)
    return LawResult(_same(expected, observed), expected, observed, "case (delta L) = delta (case L)")


def unfold_commutes_with_delay(term: Term, fuel: int) -> LawResult:
    """``unfold`` is a homomorphism: ``[[unfold]] (delta_mu x) = delta [[unfold]] x``."""
    core = elaborate(EMPTY_CTX, term)
    if not isinstance(core.ty, TMu):
        raise TypeError("unfold_commutes_with_delay needs a term of recursive type")
    unfolded = unfold_mu(core.ty)
    _ground(unfolded)
    value = denote(core)
    left = tick(unfolded, delay_sem(core.ty, value).later)
    right = delay_sem(unfolded, tick(unfolded, value.later))
    expected, observed = observe(unfolded, right, fuel), observe(unfolded, left, fuel)
    return LawResult(_same(expected, observed), expected, observed, "unfold (delta x) = delta (unfold x)")


def ext_adds_one_step(value: Any, f: Callable, times: int, fuel: int) -> LawResult:
    """``ext(f, step_l)`` applied to ``delta^times (eta a)`` takes ``times`` more steps than ``f a``."""
    hat = ext(f, step_l)
    expected = _shifted(force(f(value), fuel), times)
    observed = force(hat(delay_n(eta(value), times)), fuel + times)
    return LawResult(_same(expected, observed), expected, observed, "ext(f) . delta = delta . ext(f)")


def reduction_preserves_denotation(term: Term, fuel: int) -> LawResult:
    """A free step leaves the observation unchanged; a counted step removes one delay."""
    core = elaborate(EMPTY_CTX, term)
    _ground(core.ty)
    annotated = erase(core, ascribe=True)
    reduct = step(annotated)
    if reduct is NORMAL_FORM:
        return LawResult(True, None, None, "value")
    before = observe(core.ty, denote(core), fuel)
    after = observe(core.ty, denote(check(EMPTY_CTX, reduct.term, core.ty)), fuel)
    expected = _shifted(after, int(reduct.kind))
    return LawResult(_same(expected, before), expected, before, f"{reduct.rule} step")


def substitution_lemma(body: Term, var: str, var_ty: Type, arg: Term, fuel: int) -> LawResult:
    """``[[M[N/x]]] = [[M]]{x := [[N]]}``."""
    open_core = elaborate(TermCtx().extend(var, var_ty), body)
    _ground(open_core.ty)
    arg_value = denote(check(EMPTY_CTX, arg, var_ty))
    expected = observe(open_core.ty, denote(open_core, {var: arg_value}), fuel)
    substituted = check(EMPTY_CTX, subst_term(body, arg, var), open_core.ty)
    observed = observe(open_core.ty, denote(substituted), fuel)
    return LawResult(_same(expected, observed), expected, observed, "substitution")


def folded(term: Term, ty: Type) -> Term:
    """``(fold M : mu a. ty)`` for a closed ``ty``."""
    return Ascribe(Fold(term), TMu("a", ty))


def delta_insensitive(ty: Type, term: Term, a: int, b: int, depth: int) -> Verdict:
    """``delta^a [[M]]`` and ``delta^b [[M]]`` are bisimilar."""
    value = denote(check(EMPTY_CTX, term, ty))
    return bisim(ty, delay_sem(ty, value, a), delay_sem(ty, value, b), depth)


class TermSampler:
    """Random closed, inferable terms of ground type.

    Terms mix delays, beta redexes, projections and case splits so that the
    law checks see both free and counted steps. Deterministic in ``seed``.
    """

    def __init__(self, seed: int, max_depth: int = 4):
        self.rng = random.Random(seed)
        self.max_depth = max_depth

    def ground_type(self) -> Type:
        return self.rng.choice((UNIT, BOOL, TSum(BOOL, UNIT)))

    def term(self, ty: Type, depth: int = None, scope: tuple = ()) -> Term:
        depth = self.max_depth if depth is None else depth
        leaves = [(name, bound) for name, bound in scope if bound == ty]
        if depth <= 0 or self.rng.random() < 0.25:
            if leaves and self.rng.random() < 0.5:
                return Var(self.rng.choice(leaves)[0])
            return self._intro(ty, depth, scope)
        sub = depth - 1
        choice = self.rng.randrange(6)
        if choice == 0:
            return delayed(self.term(ty, sub, scope), 1)
        if choice == 1:
            var = f"v{depth}"
            return App(Lam(var, ty, Var(var)), self.term(ty, sub, scope))
        if choice == 2:
            return Fst(Pair(self.term(ty, sub, scope), self.term(UNIT, sub, scope)))
        if choice == 3:
            return Snd(Pair(self.term(UNIT, sub, scope), self.term(ty, sub, scope)))
        if choice == 4:
            return self.case(ty, sub, scope)
        return Unfold(folded(self.term(ty, sub, scope), ty))

    def case(self, ty: Type, depth: int = None, scope: tuple = ()) -> Case:
        depth = self.max_depth if depth is None else depth
        scrutinee = self.term(BOOL, depth, scope)
        return Case(scrutinee, "l", self.term(ty, depth, scope), "r", self.term(ty, depth, scope))

    def _intro(self, ty: Type, depth: int, scope: tuple) -> Term:
        if isinstance(ty, TUnit):
            return UNIT_VAL
        side = Inl if self.rng.random() < 0.5 else Inr
        inner = ty.left if side is Inl else ty.right
        return Ascribe(side(self.term(inner, depth - 1, scope)), ty)
