from fpcProject.fpc.prelude import BOOL, NAT
from fpcProject.fpc.syntax import (
    HOLE,
    UNIT,
    UNIT_VAL,
    App,
    Case,
    Fold,
    Inl,
    Lam,
    Pair,
    TArrow,
    TMu,
    TSum,
    TVar,
    Var,
    alpha_eq,
    alpha_eq_type,
    count_holes,
    free_type_vars,
    is_value,
    subst_term,
    subst_type,
    unfold_mu,
)


def test_values():
    assert is_value(Lam("x", UNIT, App(Var("x"), Var("x"))))
    assert is_value(Fold(App(Var("f"), UNIT_VAL))).kind == "fold"
    assert is_value(Pair(App(Var("f"), UNIT_VAL), UNIT_VAL)).kind == "pair"
    assert is_value(App(Lam("x", UNIT, Var("x")), UNIT_VAL)) is None
    assert is_value(Var("x")) is None


def test_free_variables():
    term = Case(Var("s"), "x", App(Var("x"), Var("y")), "z", Var("x"))
    assert term.fv == frozenset({"s", "y", "x"})
    assert Lam("x", UNIT, Var("x")).fv == frozenset()


def test_substitution_replaces_free_occurrences_only():
    term = App(Var("x"), Lam("x", UNIT, Var("x")))
    assert subst_term(term, UNIT_VAL, "x") == App(UNIT_VAL, Lam("x", UNIT, Var("x")))


def test_substitution_avoids_capture():
    result = subst_term(Lam("y", UNIT, Var("x")), Var("y"), "x")
    assert isinstance(result, Lam)
    assert result.var != "y"
    assert result.body == Var("y")


def test_substitution_avoids_capture_in_case_branches():
    term = Case(Var("s"), "y", Var("x"), "z", Var("z"))
    result = subst_term(term, Var("y"), "x")
    assert result.left_var != "y"
    assert result.left == Var("y")
    assert result.right == Var("z")


def test_alpha_equivalence_of_terms():
    assert alpha_eq(Lam("x", UNIT, Var("x")), Lam("y", UNIT, Var("y")))
    assert alpha_eq(Lam("x", UNIT, Var("z")), Lam("y", UNIT, Var("z")))
    assert not alpha_eq(Lam("x", UNIT, Var("x")), Lam("y", UNIT, Var("x")))
    assert alpha_eq(Case(Var("s"), "a", Var("a"), "b", UNIT_VAL), Case(Var("s"), "c", Var("c"), "d", UNIT_VAL))


def test_alpha_equivalence_of_types():
    assert alpha_eq_type(NAT, TMu("n", TSum(UNIT, TVar("n"))))
    assert not alpha_eq_type(NAT, TMu("n", TSum(TVar("n"), UNIT)))
    assert not alpha_eq_type(TVar("a"), TVar("b"))


def test_type_substitution_avoids_capture():
    ty = TMu("b", TArrow(TVar("a"), TVar("b")))
    result = subst_type(ty, TVar("b"), "a")
    assert result.binder != "b"
    assert alpha_eq_type(result, TMu("c", TArrow(TVar("b"), TVar("c"))))
    assert free_type_vars(result) == frozenset({"b"})


def test_unfold_mu():
    assert unfold_mu(NAT) == TSum(UNIT, NAT)
    assert unfold_mu(TMu("a", BOOL)) == BOOL


def test_count_holes():
    assert count_holes(App(HOLE, Inl(HOLE))) == 2
    assert count_holes(Lam("x", UNIT, HOLE)) == 1
    assert count_holes(UNIT_VAL) == 0
