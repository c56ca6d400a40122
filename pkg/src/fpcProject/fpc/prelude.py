"""Term builders for the standard encodings: naturals, booleans, ``ifz``, the
Turing fixed-point combinator and divergence."""

from fpcProject.fpc.syntax import (
    UNIT,
    UNIT_VAL,
    App,
    Ascribe,
    Case,
    Fold,
    Inl,
    Inr,
    Lam,
    TArrow,
    Term,
    TMu,
    TSum,
    TVar,
    Type,
    Unfold,
    Var,
    free_type_vars,
    fresh_name,
)

NAT = TMu("a", TSum(UNIT, TVar("a")))
BOOL = TSum(UNIT, UNIT)


def zero() -> Term:
    return Ascribe(Fold(Inl(UNIT_VAL)), NAT)


def succ(n: Term) -> Term:
    return Ascribe(Fold(Inr(n)), NAT)


def numeral(n: int) -> Term:
    term = zero()
    for _ in range(n):
        term = succ(term)
    return term


def true() -> Term:
    return Ascribe(Inl(UNIT_VAL), BOOL)


def false() -> Term:
    return Ascribe(Inr(UNIT_VAL), BOOL)


def ifz(scrutinee: Term, if_zero: Term, if_succ: Term) -> Term:
    """``case (unfold L) of inl z => M | inr p => N`` with z, p not free in M, N."""
    avoid = if_zero.fv | if_succ.fv
    return Case(Unfold(scrutinee), fresh_name("z", avoid), if_zero, fresh_name("p", avoid), if_succ)


def ifz_pred(scrutinee: Term, if_zero: Term, pred_var: str, if_succ: Term) -> Term:
    """``ifz`` whose successor branch binds the predecessor as ``pred_var``."""
    return Case(Unfold(scrutinee), fresh_name("z", if_zero.fv), if_zero, pred_var, if_succ)


def turing_type(ty: Type) -> Type:
    """``mu b. b -> (A -> A) -> A``."""
    binder = fresh_name("b", free_type_vars(ty))
    return TMu(binder, TArrow(TVar(binder), TArrow(TArrow(ty, ty), ty)))


def turing_theta(ty: Type) -> Term:
    """``fn x : B => fn y : A -> A => y (unfold x x y)``."""
    b = turing_type(ty)
    body = App(Var("y"), App(App(Unfold(Var("x")), Var("x")), Var("y")))
    return Lam("x", b, Lam("y", TArrow(ty, ty), body))


def turing_fix(ty: Type) -> Term:
    """``fix_A = theta (fold theta : B)`` of type ``(A -> A) -> A``."""
    theta = turing_theta(ty)
    return App(theta, Ascribe(Fold(theta), turing_type(ty)))


def diverge(ty: Type) -> Term:
    """``fix_A (fn x : A => x)``: never reaches a value."""
    return App(turing_fix(ty), Lam("x", ty, Var("x")))


def delayed(term: Term, times: int) -> Term:
    """Wrap ``term`` in ``times`` layers of ``unfold (fold -)``."""
    for _ in range(times):
        term = Unfold(Fold(term))
    return term
