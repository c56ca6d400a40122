"""Well-formedness, bidirectional type checking and elaboration to the core IR.

``inl`` and ``inr`` only check against an expected type: the type comes from
an ascription ``(M : T)``, a lambda annotation or the domain of the function
they are applied to. ``fold`` checks the same way; with no expected type it is
given the trivial recursive type ``mu a. σ`` of its argument. Type equality is
alpha-equivalence.
"""

from dataclasses import dataclass
from typing import Optional

from fpcProject.fpc.errors import TypeCheckError, UnboundNameError
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
    TArrow,
    Term,
    TMu,
    TProd,
    TSum,
    Type,
    Unfold,
    UnitVal,
    Var,
    alpha_eq_type,
    free_type_vars,
    fresh_name,
    unfold_mu,
)


@dataclass(frozen=True)
class TypeCtx:
    """Θ: ordered type variables, no duplicates."""

    names: tuple = ()

    def extend(self, name: str) -> "TypeCtx":
        if name in self.names:
            raise ValueError(f"type variable {name} already bound")
        return TypeCtx(self.names + (name,))


@dataclass(frozen=True)
class TermCtx:
    """Γ: ordered (name, type) bindings. Extending with a bound name shadows it."""

    bindings: tuple = ()

    def extend(self, name: str, ty: Type) -> "TermCtx":
        kept = tuple((x, t) for x, t in self.bindings if x != name)
        return TermCtx(kept + ((name, ty),))

    def lookup(self, name: str) -> Optional[Type]:
        for x, ty in reversed(self.bindings):
            if x == name:
                return ty
        return None

    def names(self) -> frozenset:
        return frozenset(x for x, _ in self.bindings)

    def __len__(self) -> int:
        return len(self.bindings)


EMPTY_CTX = TermCtx()


def wf_type(theta: TypeCtx, ty: Type) -> bool:
    return free_type_vars(ty) <= frozenset(theta.names)


# ---------------------------------------------------------------- core IR


class CoreTerm:
    """Elaborated term; every node carries its type in ``ty``."""

    __slots__ = ()


@dataclass(frozen=True, slots=True)
class CVar(CoreTerm):
    name: str
    ty: Type


@dataclass(frozen=True, slots=True)
class CUnit(CoreTerm):
    ty: Type = UNIT


@dataclass(frozen=True, slots=True)
class CPair(CoreTerm):
    first: CoreTerm
    second: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CFst(CoreTerm):
    arg: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CSnd(CoreTerm):
    arg: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CInl(CoreTerm):
    arg: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CInr(CoreTerm):
    arg: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CCase(CoreTerm):
    scrutinee: CoreTerm
    left_var: str
    left: CoreTerm
    right_var: str
    right: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CLam(CoreTerm):
    var: str
    var_ty: Type
    body: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CApp(CoreTerm):
    fn: CoreTerm
    arg: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CFold(CoreTerm):
    arg: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CUnfold(CoreTerm):
    """``ty`` is the unfolded type τ[μα.τ/α]."""

    arg: CoreTerm
    ty: Type


@dataclass(frozen=True, slots=True)
class CHole(CoreTerm):
    ty: Type


@dataclass(frozen=True)
class HoleSpec:
    """Typing of a context hole: the term plugged in has type ``ty`` under ``gamma``."""

    gamma: TermCtx
    ty: Type


# ---------------------------------------------------------------- checker


class _Elaborator:
    def __init__(self, hole: Optional[HoleSpec] = None):
        self.hole = hole

    def wf(self, node: Term, ty: Type) -> None:
        unbound = free_type_vars(ty)
        if unbound:
            raise UnboundNameError(node, message=f"unbound type variable {sorted(unbound)[0]}")

    def synth(self, ctx: TermCtx, term: Term) -> CoreTerm:
        match term:
            case Var(name):
                ty = ctx.lookup(name)
                if ty is None:
                    raise UnboundNameError(term, message=f"unbound variable {name}")
                return CVar(name, ty)
            case UnitVal():
                return CUnit()
            case Pair(first, second):
                a, b = self.synth(ctx, first), self.synth(ctx, second)
                return CPair(a, b, TProd(a.ty, b.ty))
            case Fst(arg) | Snd(arg):
                core = self.synth(ctx, arg)
                if not isinstance(core.ty, TProd):
                    raise TypeCheckError(term, expected="a product type", found=core.ty)
                if isinstance(term, Fst):
                    return CFst(core, core.ty.left)
                return CSnd(core, core.ty.right)
            case Fold(arg):
                # without an expected type, fold M : σ is read at the trivial μα.σ
                core = self.synth(ctx, arg)
                binder = fresh_name("a", free_type_vars(core.ty))
                return CFold(core, TMu(binder, core.ty))
            case Inl() | Inr():
                raise TypeCheckError(term, message="cannot infer the type of an injection; add an ascription")
            case Case(scrutinee, x1, left, x2, right):
                scr = self.synth(ctx, scrutinee)
                if not isinstance(scr.ty, TSum):
                    raise TypeCheckError(term, expected="a sum type", found=scr.ty)
                left_ctx = ctx.extend(x1, scr.ty.left)
                right_ctx = ctx.extend(x2, scr.ty.right)
                try:
                    lcore = self.synth(left_ctx, left)
                except TypeCheckError as first_error:
                    try:
                        rcore = self.synth(right_ctx, right)
                    except TypeCheckError:
                        raise first_error
                    lcore = self.check(left_ctx, left, rcore.ty)
                else:
                    rcore = self.check(right_ctx, right, lcore.ty)
                return CCase(scr, x1, lcore, x2, rcore, lcore.ty)
            case Lam(var, ty, body):
                self.wf(term, ty)
                core = self.synth(ctx.extend(var, ty), body)
                return CLam(var, ty, core, TArrow(ty, core.ty))
            case App(fn, arg):
                fcore = self.synth(ctx, fn)
                if not isinstance(fcore.ty, TArrow):
                    raise TypeCheckError(term, expected="a function type", found=fcore.ty)
                acore = self.check(ctx, arg, fcore.ty.dom)
                return CApp(fcore, acore, fcore.ty.cod)
            case Unfold(arg):
                core = self.synth(ctx, arg)
                if not isinstance(core.ty, TMu):
                    raise TypeCheckError(term, expected="a recursive type", found=core.ty)
                return CUnfold(core, unfold_mu(core.ty))
            case Ascribe(inner, ty):
                self.wf(term, ty)
                return self.check(ctx, inner, ty)
            case Hole():
                return self.fill_hole(ctx, term)
        raise TypeError(f"Unexpected term: {term!r}")

    def check(self, ctx: TermCtx, term: Term, ty: Type) -> CoreTerm:
        match term:
            case Inl(arg) | Inr(arg):
                if not isinstance(ty, TSum):
                    raise TypeCheckError(term, expected=ty, found="an injection")
                side = ty.left if isinstance(term, Inl) else ty.right
                core = self.check(ctx, arg, side)
                return CInl(core, ty) if isinstance(term, Inl) else CInr(core, ty)
            case Fold(arg):
                if not isinstance(ty, TMu):
                    raise TypeCheckError(term, expected=ty, found="a fold")
                return CFold(self.check(ctx, arg, unfold_mu(ty)), ty)
            case Pair(first, second) if isinstance(ty, TProd):
                return CPair(self.check(ctx, first, ty.left), self.check(ctx, second, ty.right), ty)
            case Lam(var, var_ty, body) if isinstance(ty, TArrow) and alpha_eq_type(var_ty, ty.dom):
                self.wf(term, var_ty)
                return CLam(var, var_ty, self.check(ctx.extend(var, var_ty), body, ty.cod), ty)
            case Case(scrutinee, x1, left, x2, right):
                scr = self.synth(ctx, scrutinee)
                if not isinstance(scr.ty, TSum):
                    raise TypeCheckError(term, expected="a sum type", found=scr.ty)
                lcore = self.check(ctx.extend(x1, scr.ty.left), left, ty)
                rcore = self.check(ctx.extend(x2, scr.ty.right), right, ty)
                return CCase(scr, x1, lcore, x2, rcore, ty)
        core = self.synth(ctx, term)
        if not alpha_eq_type(core.ty, ty):
            raise TypeCheckError(term, expected=ty, found=core.ty)
        return core

    def fill_hole(self, ctx: TermCtx, term: Term) -> CoreTerm:
        if self.hole is None:
            raise TypeCheckError(term, message="a hole can only appear in a context")
        for name, ty in self.hole.gamma.bindings:
            bound = ctx.lookup(name)
            if bound is None or not alpha_eq_type(bound, ty):
                raise TypeCheckError(term, message=f"hole context does not provide {name}")
        return CHole(self.hole.ty)


def infer(ctx: TermCtx, term: Term, hole: Optional[HoleSpec] = None) -> Type:
    return _Elaborator(hole).synth(ctx, term).ty


def check(ctx: TermCtx, term: Term, ty: Type, hole: Optional[HoleSpec] = None) -> CoreTerm:
    return _Elaborator(hole).check(ctx, term, ty)


def elaborate(ctx: TermCtx, term: Term, hole: Optional[HoleSpec] = None) -> CoreTerm:
    return _Elaborator(hole).synth(ctx, term)


def typecheck_closed(term: Term) -> CoreTerm:
    return elaborate(EMPTY_CTX, term)


# ---------------------------------------------------------------- erasure


def erase(core: CoreTerm, ascribe: bool = False) -> Term:
    """Drop annotations. With ``ascribe`` the check-only forms keep their type
    as an ascription, so the result is again inferable."""

    def go(c: CoreTerm) -> Term:
        return erase(c, ascribe)

    match core:
        case CVar(name, _):
            return Var(name)
        case CUnit():
            return UnitVal()
        case CHole():
            return Hole()
        case CPair(a, b, _):
            return Pair(go(a), go(b))
        case CFst(a, _):
            return Fst(go(a))
        case CSnd(a, _):
            return Snd(go(a))
        case CLam(var, var_ty, body, _):
            return Lam(var, var_ty, go(body))
        case CApp(f, a, _):
            return App(go(f), go(a))
        case CUnfold(a, _):
            return Unfold(go(a))
        case CCase(s, x1, left, x2, right, _):
            return Case(go(s), x1, go(left), x2, go(right))
        case CInl(a, ty):
            out = Inl(go(a))
        case CInr(a, ty):
            out = Inr(go(a))
        case CFold(a, ty):
            out = Fold(go(a))
        case _:
            raise TypeError(f"Unexpected core term: {core!r}")
    return Ascribe(out, ty) if ascribe else out


def core_children(core: CoreTerm) -> tuple:
    match core:
        case CVar() | CUnit() | CHole():
            return ()
        case CPair(a, b, _) | CApp(a, b, _):
            return (a, b)
        case CFst(a, _) | CSnd(a, _) | CInl(a, _) | CInr(a, _) | CFold(a, _) | CUnfold(a, _):
            return (a,)
        case CLam(_, _, body, _):
            return (body,)
        case CCase(s, _, left, _, right, _):
            return (s, left, right)
    raise TypeError(f"Unexpected core term: {core!r}")


def print_core(core: CoreTerm, indent: int = 0) -> str:
    from fpcProject.fpc.surface import print_type

    label = type(core).__name__[1:]
    match core:
        case CVar(name, _):
            label = f"Var {name}"
        case CLam(var, var_ty, _, _):
            label = f"Lam {var} : {print_type(var_ty)}"
        case CCase(_, x1, _, x2, _, _):
            label = f"Case inl {x1} | inr {x2}"
    lines = ["  " * indent + f"{label} : {print_type(core.ty)}"]
    lines.extend(print_core(child, indent + 1) for child in core_children(core))
    return "\n".join(lines)
