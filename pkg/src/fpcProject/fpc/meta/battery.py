"""Finite argument batteries for the arrow cases of the relation checkers."""

from itertools import islice

from fpcProject.constants import DEFAULT_BATTERY_LIMIT, DEFAULT_BATTERY_SIZE
from fpcProject.fpc.denot import SemVal, delay_sem, denote
from fpcProject.fpc.prelude import diverge
from fpcProject.fpc.syntax import (
    UNIT_VAL,
    Case,
    Fold,
    Inl,
    Inr,
    Lam,
    Pair,
    TArrow,
    TMu,
    TProd,
    TSum,
    TUnit,
    Type,
    Unfold,
    Var,
    alpha_eq_type,
    canonical_type,
    term_size,
    unfold_mu,
)
from fpcProject.fpc.typechecker import EMPTY_CTX, check


def generate_terms(ty: Type, size: int, limit: int, scope: tuple = ()) -> list:
    """Terms of type ``ty`` in ``scope`` (name, type pairs) with at most ``size`` nodes."""
    if size <= 0:
        return []
    return list(islice(_generate(ty, size, limit, scope), limit))


def _generate(ty: Type, size: int, limit: int, scope: tuple):
    for name, bound in reversed(scope):
        if alpha_eq_type(bound, ty):
            yield Var(name)
    match ty:
        case TUnit():
            yield UNIT_VAL
        case TSum(left, right):
            lefts = generate_terms(left, size - 1, limit, scope)
            rights = generate_terms(right, size - 1, limit, scope)
            for i in range(max(len(lefts), len(rights))):
                if i < len(lefts):
                    yield Inl(lefts[i])
                if i < len(rights):
                    yield Inr(rights[i])
        case TProd(left, right):
            for a in generate_terms(left, size - 2, limit, scope):
                for b in generate_terms(right, size - 1 - term_size(a), limit, scope):
                    yield Pair(a, b)
        case TArrow(dom, cod):
            var = f"x{len(scope)}"
            for body in generate_terms(cod, size - 1, limit, scope + ((var, dom),)):
                yield Lam(var, dom, body)
        case TMu():
            for body in generate_terms(unfold_mu(ty), size - 1, limit, scope):
                yield Fold(body)
    # eliminate sum-typed variables so generated functions can inspect their input
    if size >= 4:
        for name, bound in reversed(scope):
            if isinstance(bound, TSum):
                l_var, r_var = f"l{len(scope)}", f"r{len(scope)}"
                lefts = generate_terms(ty, (size - 2) // 2, limit, scope + ((l_var, bound.left),))
                rights = generate_terms(ty, (size - 2) // 2, limit, scope + ((r_var, bound.right),))
                for a in lefts:
                    for b in rights:
                        yield Case(Var(name), l_var, a, r_var, b)


class Battery:
    """Closed test arguments per type, cached for one checking session.

    Each type's battery is the generated closed terms up to ``size`` nodes,
    the divergent ``fix (fn x => x)``, and one-step delayed variants.
    """

    def __init__(self, size: int = DEFAULT_BATTERY_SIZE, limit: int = DEFAULT_BATTERY_LIMIT):
        self.size = size
        self.limit = limit
        self._terms: dict = {}
        self._values: dict = {}

    def terms(self, ty: Type) -> list:
        key = canonical_type(ty)
        if key not in self._terms:
            generated = generate_terms(ty, self.size, self.limit)
            self._terms[key] = generated + [diverge(ty)]
        return self._terms[key]

    def denotations(self, ty: Type) -> list:
        """(denotation, term) pairs, each related by construction."""
        key = canonical_type(ty)
        if key not in self._values:
            pairs = []
            for term in self.terms(ty):
                value = denote(check(EMPTY_CTX, term, ty))
                pairs.append((value, term))
            self._values[key] = pairs
        return self._values[key]

    def logrel_pairs(self, ty: Type) -> list:
        """``(d, N)`` and ``(delta d, unfold (fold N))`` for every battery term."""
        out = []
        for value, term in self.denotations(ty):
            out.append((value, term))
            out.append((delay_sem(ty, value), Unfold(Fold(term))))
        return out

    def bisim_pairs(self, ty: Type) -> list:
        """``(x, x)``, ``(delta x, x)`` and ``(x, delta x)`` for every battery denotation."""
        out = []
        for value, _ in self.denotations(ty):
            delayed: SemVal = delay_sem(ty, value)
            out.extend([(value, value), (delayed, value), (value, delayed)])
        return out
