import pytest

from fpcProject.components.context_equivalence import load_contexts
from fpcProject.fpc.meta.contexts import Context, ctx_check, ctx_equiv_suite, fill
from fpcProject.fpc.opsem import Evaluated, eval_big
from fpcProject.fpc.prelude import BOOL, NAT, diverge, numeral, true
from fpcProject.fpc.surface import parse_term, parse_type
from fpcProject.fpc.syntax import HOLE, UNIT, UNIT_VAL, App, Lam, TArrow, Var
from fpcProject.fpc.typechecker import EMPTY_CTX, TermCtx

from conftest import CONTEXT_DIR, TEST_FUEL

SUITES = [("unit.ctx", UNIT), ("bool.ctx", BOOL), ("nat.ctx", NAT)]


def test_context_needs_one_hole():
    with pytest.raises(ValueError):
        Context(UNIT_VAL)
    with pytest.raises(ValueError):
        Context(App(HOLE, HOLE))


def test_fill_captures_free_variables():
    context = Context(Lam("x", UNIT, HOLE))
    assert fill(context, Var("x")) == Lam("x", UNIT, Var("x"))


def test_ctx_check_hole_under_binder():
    context = Context(Lam("x", UNIT, HOLE))
    gamma = TermCtx().extend("x", UNIT)
    assert ctx_check(context, gamma, UNIT, EMPTY_CTX, TArrow(UNIT, UNIT))
    assert ctx_check(context, EMPTY_CTX, UNIT, EMPTY_CTX, TArrow(UNIT, UNIT))
    assert not ctx_check(context, TermCtx().extend("y", UNIT), UNIT, EMPTY_CTX, TArrow(UNIT, UNIT))


def test_ctx_check_hole_type():
    context = Context(parse_term("case [-] of { inl x => x | inr y => y }"))
    assert ctx_check(context, EMPTY_CTX, BOOL, EMPTY_CTX, UNIT)
    assert not ctx_check(context, EMPTY_CTX, UNIT, EMPTY_CTX, UNIT)


@pytest.mark.parametrize("name, ty", SUITES)
def test_suite_contexts_are_well_typed(name, ty):
    contexts = load_contexts(CONTEXT_DIR / name)
    assert len(contexts) == 30
    assert all(ctx_check(c, EMPTY_CTX, ty, EMPTY_CTX, UNIT) for c in contexts)


@pytest.mark.parametrize(
    "name, plug",
    [("unit.ctx", UNIT_VAL), ("bool.ctx", true()), ("nat.ctx", numeral(2))],
)
def test_suite_contexts_terminate(name, plug):
    for context in load_contexts(CONTEXT_DIR / name):
        assert isinstance(eval_big(fill(context, plug), TEST_FUEL), Evaluated)


def test_equivalent_pair_agrees_on_every_context():
    left = parse_term("(fold (inr (fold (inl ()) : mu a. 1 + a)) : mu a. 1 + a)")
    right = parse_term("unfold (fold unfold (fold (fold (inr (fold (inl ()) : mu a. 1 + a)) : mu a. 1 + a)))")
    result = ctx_equiv_suite(left, right, load_contexts(CONTEXT_DIR / "nat.ctx"), TEST_FUEL, hole_ty=parse_type("mu a. 1 + a"))
    assert result.all_agree
    assert result.agreed == 30


def test_step_counts_may_differ():
    contexts = [Context(HOLE)]
    result = ctx_equiv_suite(UNIT_VAL, parse_term("unfold (fold ())"), contexts, TEST_FUEL, hole_ty=UNIT)
    outcome = result.outcomes[0]
    assert (outcome.status, outcome.left_steps, outcome.right_steps) == ("agree", 0, 1)


def test_timeouts_are_unknown():
    result = ctx_equiv_suite(UNIT_VAL, diverge(UNIT), [Context(HOLE)], 500, hole_ty=UNIT)
    assert result.unknown == 1
    assert result.outcomes[0].timed_out == ("right",)


def test_ill_typed_contexts_are_counted():
    contexts = [Context(HOLE), Context(parse_term("case [-] of { inl x => x | inr y => y }"))]
    result = ctx_equiv_suite(UNIT_VAL, UNIT_VAL, contexts, TEST_FUEL, hole_ty=UNIT)
    assert (result.agreed, result.ill_typed) == (1, 1)
