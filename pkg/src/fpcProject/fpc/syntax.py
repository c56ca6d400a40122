"""Abstract syntax of FPC types and terms.

Binders keep their surface names. Alpha-equivalence is decided on canonical
forms, where every binder is renamed after its nesting level (``%0``, ``%1``,
...), names the parser can never produce. Substitution is capture-avoiding
and draws fresh names from a deterministic :class:`NameSupply`.
"""

import os
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional


# ---------------------------------------------------------------- types


class Type:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class TVar(Type):
    name: str


@dataclass(frozen=True, slots=True)
class TUnit(Type):
    pass


@dataclass(frozen=True, slots=True)
class TSum(Type):
    left: Type
    right: Type


@dataclass(frozen=True, slots=True)
class TProd(Type):
    left: Type
    right: Type


@dataclass(frozen=True, slots=True)
class TArrow(Type):
    dom: Type
    cod: Type


@dataclass(frozen=True, slots=True)
class TMu(Type):
    binder: str
    body: Type


UNIT = TUnit()


@lru_cache(maxsize=None)
def free_type_vars(ty: Type) -> frozenset:
    match ty:
        case TVar(name):
            return frozenset((name,))
        case TUnit():
            return frozenset()
        case TSum(a, b) | TProd(a, b) | TArrow(a, b):
            return free_type_vars(a) | free_type_vars(b)
        case TMu(binder, body):
            return free_type_vars(body) - {binder}
    raise TypeError(f"Unexpected type: {ty!r}")


# ---------------------------------------------------------------- terms


class Term:
    __slots__ = ()

    @property
    def fv(self) -> frozenset:
        raise NotImplementedError


def _fv(*parts) -> frozenset:
    out = frozenset()
    for p in parts:
        out |= p.fv
    return out


_NO_FV = frozenset()


@dataclass(frozen=True, slots=True)
class Var(Term):
    name: str

    @property
    def fv(self) -> frozenset:
        return frozenset((self.name,))


@dataclass(frozen=True, slots=True)
class UnitVal(Term):
    @property
    def fv(self) -> frozenset:
        return _NO_FV


@dataclass(frozen=True, slots=True)
class Hole(Term):
    """The hole ``[-]`` of a program context."""

    @property
    def fv(self) -> frozenset:
        return _NO_FV


# Compound nodes cache their free variables; substitution skips any subtree
# the substituted name does not occur in.


@dataclass(frozen=True, slots=True)
class Pair(Term):
    first: Term
    second: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", _fv(self.first, self.second))


@dataclass(frozen=True, slots=True)
class Fst(Term):
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.arg.fv)


@dataclass(frozen=True, slots=True)
class Snd(Term):
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.arg.fv)


@dataclass(frozen=True, slots=True)
class Inl(Term):
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.arg.fv)


@dataclass(frozen=True, slots=True)
class Inr(Term):
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.arg.fv)


@dataclass(frozen=True, slots=True)
class Case(Term):
    scrutinee: Term
    left_var: str
    left: Term
    right_var: str
    right: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "fv",
            self.scrutinee.fv | (self.left.fv - {self.left_var}) | (self.right.fv - {self.right_var}),
        )


@dataclass(frozen=True, slots=True)
class Lam(Term):
    var: str
    ty: Type
    body: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.body.fv - {self.var})


@dataclass(frozen=True, slots=True)
class App(Term):
    fn: Term
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", _fv(self.fn, self.arg))


@dataclass(frozen=True, slots=True)
class Fold(Term):
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.arg.fv)


@dataclass(frozen=True, slots=True)
class Unfold(Term):
    arg: Term
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.arg.fv)


@dataclass(frozen=True, slots=True)
class Ascribe(Term):
    """Surface ascription ``(M : T)``; erased before evaluation."""

    term: Term
    ty: Type
    fv: frozenset = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "fv", self.term.fv)


UNIT_VAL = UnitVal()
HOLE = Hole()


@dataclass(frozen=True)
class ValueWitness:
    """Evidence that a closed term matches the value grammar."""

    kind: str
    term: Term


_VALUE_HEADS = {UnitVal: "unit", Inl: "inl", Inr: "inr", Pair: "pair", Lam: "lam", Fold: "fold"}


def is_value(term: Term) -> Optional[ValueWitness]:
    kind = _VALUE_HEADS.get(type(term))
    return None if kind is None else ValueWitness(kind, term)


# ---------------------------------------------------------------- fresh names


_TRAILING = re.compile(r"[0-9']+$")


class NameSupply:
    """Deterministic fresh names: ``root`` followed by the smallest index >= seed
    that is not in the avoid set."""

    def __init__(self, seed: int = 0):
        self.seed = seed

    def fresh(self, base: str, avoid) -> str:
        root = _TRAILING.sub("", base) or "v"
        i = self.seed
        while f"{root}{i}" in avoid:
            i += 1
        return f"{root}{i}"


_supply = NameSupply(int(os.getenv("FPC_SEED", "0")))


def set_seed(seed: int) -> None:
    global _supply
    _supply = NameSupply(seed)


def fresh_name(base: str, avoid) -> str:
    return _supply.fresh(base, avoid)


# ---------------------------------------------------------------- substitution


def subst_type(ty: Type, value: Type, name: str) -> Type:
    """``ty[value/name]``, renaming Mu binders that would capture."""
    if name not in free_type_vars(ty):
        return ty
    match ty:
        case TVar(n):
            return value if n == name else ty
        case TSum(a, b):
            return TSum(subst_type(a, value, name), subst_type(b, value, name))
        case TProd(a, b):
            return TProd(subst_type(a, value, name), subst_type(b, value, name))
        case TArrow(a, b):
            return TArrow(subst_type(a, value, name), subst_type(b, value, name))
        case TMu(binder, body):
            value_fv = free_type_vars(value)
            if binder in value_fv:
                renamed = fresh_name(binder, value_fv | free_type_vars(body) | {name})
                body = subst_type(body, TVar(renamed), binder)
                binder = renamed
            return TMu(binder, subst_type(body, value, name))
    raise TypeError(f"Unexpected type in subst_type: {ty!r}")


@lru_cache(maxsize=None)
def unfold_mu(ty: TMu) -> Type:
    """``τ[μα.τ/α]`` for ``ty = μα.τ``."""
    return subst_type(ty.body, ty, ty.binder)


def _rebind(var: str, body: Term, value: Term, name: str) -> tuple[str, Term]:
    # renames `var` in `body` when it would capture a free variable of `value`
    if var in value.fv:
        renamed = fresh_name(var, value.fv | body.fv | {name})
        return renamed, subst_term(body, Var(renamed), var)
    return var, body


def subst_term(term: Term, value: Term, name: str) -> Term:
    """``term[value/name]``, capture-avoiding."""
    if name not in term.fv:
        return term
    match term:
        case Var(n):
            return value if n == name else term
        case Pair(a, b):
            return Pair(subst_term(a, value, name), subst_term(b, value, name))
        case Fst(a):
            return Fst(subst_term(a, value, name))
        case Snd(a):
            return Snd(subst_term(a, value, name))
        case Inl(a):
            return Inl(subst_term(a, value, name))
        case Inr(a):
            return Inr(subst_term(a, value, name))
        case Fold(a):
            return Fold(subst_term(a, value, name))
        case Unfold(a):
            return Unfold(subst_term(a, value, name))
        case App(f, a):
            return App(subst_term(f, value, name), subst_term(a, value, name))
        case Ascribe(a, ty):
            return Ascribe(subst_term(a, value, name), ty)
        case Lam(var, ty, body):
            var, body = _rebind(var, body, value, name)
            return Lam(var, ty, subst_term(body, value, name))
        case Case(scrutinee, x1, left, x2, right):
            scrutinee = subst_term(scrutinee, value, name)
            if x1 != name:
                x1, left = _rebind(x1, left, value, name)
                left = subst_term(left, value, name)
            if x2 != name:
                x2, right = _rebind(x2, right, value, name)
                right = subst_term(right, value, name)
            return Case(scrutinee, x1, left, x2, right)
    raise TypeError(f"Unexpected term in subst_term: {term!r}")


def map_types(term: Term, fn) -> Term:
    """Apply ``fn`` to every type annotation in ``term``."""
    match term:
        case Var() | UnitVal() | Hole():
            return term
        case Pair(a, b):
            return Pair(map_types(a, fn), map_types(b, fn))
        case Fst(a):
            return Fst(map_types(a, fn))
        case Snd(a):
            return Snd(map_types(a, fn))
        case Inl(a):
            return Inl(map_types(a, fn))
        case Inr(a):
            return Inr(map_types(a, fn))
        case Fold(a):
            return Fold(map_types(a, fn))
        case Unfold(a):
            return Unfold(map_types(a, fn))
        case App(f, a):
            return App(map_types(f, fn), map_types(a, fn))
        case Ascribe(a, ty):
            return Ascribe(map_types(a, fn), fn(ty))
        case Lam(var, ty, body):
            return Lam(var, fn(ty), map_types(body, fn))
        case Case(s, x1, left, x2, right):
            return Case(map_types(s, fn), x1, map_types(left, fn), x2, map_types(right, fn))
    raise TypeError(f"Unexpected term in map_types: {term!r}")


def subst_type_in_term(term: Term, value: Type, name: str) -> Term:
    return map_types(term, lambda ty: subst_type(ty, value, name))


def strip_ascriptions(term: Term) -> Term:
    match term:
        case Var() | UnitVal() | Hole():
            return term
        case Ascribe(a, _):
            return strip_ascriptions(a)
        case Pair(a, b):
            return Pair(strip_ascriptions(a), strip_ascriptions(b))
        case Fst(a):
            return Fst(strip_ascriptions(a))
        case Snd(a):
            return Snd(strip_ascriptions(a))
        case Inl(a):
            return Inl(strip_ascriptions(a))
        case Inr(a):
            return Inr(strip_ascriptions(a))
        case Fold(a):
            return Fold(strip_ascriptions(a))
        case Unfold(a):
            return Unfold(strip_ascriptions(a))
        case App(f, a):
            return App(strip_ascriptions(f), strip_ascriptions(a))
        case Lam(var, ty, body):
            return Lam(var, ty, strip_ascriptions(body))
        case Case(s, x1, left, x2, right):
            return Case(strip_ascriptions(s), x1, strip_ascriptions(left), x2, strip_ascriptions(right))
    raise TypeError(f"Unexpected term in strip_ascriptions: {term!r}")


def children(term: Term) -> tuple[Term, ...]:
    match term:
        case Var() | UnitVal() | Hole():
            return ()
        case Pair(a, b) | App(a, b):
            return (a, b)
        case Fst(a) | Snd(a) | Inl(a) | Inr(a) | Fold(a) | Unfold(a) | Ascribe(a, _) | Lam(_, _, a):
            return (a,)
        case Case(s, _, left, _, right):
            return (s, left, right)
    raise TypeError(f"Unexpected term: {term!r}")


def term_size(term: Term) -> int:
    return 1 + sum(term_size(c) for c in children(term))


def count_holes(term: Term) -> int:
    if isinstance(term, Hole):
        return 1
    return sum(count_holes(c) for c in children(term))


# ---------------------------------------------------------------- alpha-equivalence


def _canon_type(ty: Type, scope: dict, depth: int) -> Type:
    match ty:
        case TVar(name):
            return TVar(scope.get(name, name))
        case TUnit():
            return ty
        case TSum(a, b):
            return TSum(_canon_type(a, scope, depth), _canon_type(b, scope, depth))
        case TProd(a, b):
            return TProd(_canon_type(a, scope, depth), _canon_type(b, scope, depth))
        case TArrow(a, b):
            return TArrow(_canon_type(a, scope, depth), _canon_type(b, scope, depth))
        case TMu(binder, body):
            bound = f"%{depth}"
            return TMu(bound, _canon_type(body, {**scope, binder: bound}, depth + 1))
    raise TypeError(f"Unexpected type: {ty!r}")


@lru_cache(maxsize=4096)
def canonical_type(ty: Type) -> Type:
    return _canon_type(ty, {}, 0)


def alpha_eq_type(a: Type, b: Type) -> bool:
    return a == b or canonical_type(a) == canonical_type(b)


def _canon_term(term: Term, scope: dict, depth: int) -> Term:
    def go(t: Term) -> Term:
        return _canon_term(t, scope, depth)

    match term:
        case Var(name):
            return Var(scope.get(name, name))
        case UnitVal() | Hole():
            return term
        case Pair(a, b):
            return Pair(go(a), go(b))
        case Fst(a):
            return Fst(go(a))
        case Snd(a):
            return Snd(go(a))
        case Inl(a):
            return Inl(go(a))
        case Inr(a):
            return Inr(go(a))
        case Fold(a):
            return Fold(go(a))
        case Unfold(a):
            return Unfold(go(a))
        case App(f, a):
            return App(go(f), go(a))
        case Ascribe(a, ty):
            return Ascribe(go(a), canonical_type(ty))
        case Lam(var, ty, body):
            bound = f"%{depth}"
            return Lam(bound, canonical_type(ty), _canon_term(body, {**scope, var: bound}, depth + 1))
        case Case(s, x1, left, x2, right):
            bound = f"%{depth}"
            return Case(
                go(s),
                bound,
                _canon_term(left, {**scope, x1: bound}, depth + 1),
                bound,
                _canon_term(right, {**scope, x2: bound}, depth + 1),
            )
    raise TypeError(f"Unexpected term: {term!r}")


def canonical_term(term: Term) -> Term:
    return _canon_term(term, {}, 0)


def alpha_eq(a: Term, b: Term) -> bool:
    return a == b or canonical_term(a) == canonical_term(b)
