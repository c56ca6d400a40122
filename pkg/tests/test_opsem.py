import pytest

from fpcProject.components.operational_agreement import compare, subject_reduction
from fpcProject.fpc.errors import FuelExhausted, StuckError
from fpcProject.fpc.opsem import (
    NORMAL_FORM,
    EvalTimeout,
    Evaluated,
    StepKind,
    eval_big,
    eval_small,
    step,
    zero_normalize,
)
from fpcProject.fpc.prelude import BOOL, delayed, true
from fpcProject.fpc.surface import parse_term
from fpcProject.fpc.syntax import UNIT, UNIT_VAL, App, Ascribe, Fold, Inl, Lam, Unfold, Var, alpha_eq

from conftest import CORPUS, TEST_FUEL, program

OMEGA = Lam("x", UNIT, App(Var("x"), Var("x")))


def test_fold_unfold_is_the_counted_step():
    reduct = step(Unfold(Fold(UNIT_VAL)))
    assert reduct.kind is StepKind.ONE
    assert reduct.rule == "unfold-fold"
    assert reduct.term == UNIT_VAL


def test_beta_is_free():
    reduct = step(App(Lam("x", UNIT, Var("x")), UNIT_VAL))
    assert reduct.kind is StepKind.ZERO
    assert reduct.term == UNIT_VAL


def test_step_reduces_under_evaluation_contexts():
    reduct = step(parse_term("unfold (fold (fn x : 1 => x)) ()"))
    assert reduct.path == ("fn",)
    assert reduct.kind is StepKind.ONE
    assert reduct.term == App(Lam("x", UNIT, Var("x")), UNIT_VAL)


def test_call_by_name_does_not_evaluate_arguments():
    reduct = step(App(Lam("x", UNIT, UNIT_VAL), delayed(UNIT_VAL, 2)))
    assert reduct.term == UNIT_VAL


def test_values_are_normal_forms():
    assert step(Lam("x", UNIT, App(Var("x"), Var("x")))) is NORMAL_FORM
    assert step(Fold(App(Var("f"), UNIT_VAL))) is NORMAL_FORM


def test_stuck_terms():
    with pytest.raises(StuckError, match="free variable"):
        step(App(Var("f"), UNIT_VAL))
    with pytest.raises(StuckError):
        step(App(UNIT_VAL, UNIT_VAL))


def test_ascribed_values_are_contracted_through():
    term = Unfold(Ascribe(Fold(UNIT_VAL), parse_term("(fold () : mu a. 1)").ty))
    assert step(term).term == UNIT_VAL


def test_two_unfolds_takes_two_counted_steps():
    term = program("two_unfolds").term
    big, small = eval_big(term, TEST_FUEL), eval_small(term, TEST_FUEL)
    assert big.value == small.value == UNIT_VAL
    assert big.k == small.k == 2


def test_true_after_three():
    result = eval_big(program("true_after_3").term, TEST_FUEL)
    assert result.value == Inl(UNIT_VAL)
    assert result.k == 3


def test_ascriptions_are_erased_on_entry():
    assert eval_big(true(), 10).value == Inl(UNIT_VAL)
    assert eval_small(true(), 10).value == Inl(UNIT_VAL)


def test_divergence_times_out():
    term = program("diverge").term
    assert isinstance(eval_big(term, 500), EvalTimeout)
    timeout = eval_small(term, 500, record_trace=False)
    assert isinstance(timeout, EvalTimeout)
    assert timeout.k > 0


def test_lazy_pair_component_is_never_forced():
    result = eval_big(program("snd_lazy").term, TEST_FUEL)
    assert isinstance(result, Evaluated)
    assert result.value == UNIT_VAL


def test_trace_records_every_reduction():
    result = eval_small(delayed(true(), 2), 100)
    assert len(result.trace.steps) == result.reductions
    assert result.trace.k == result.k == 2
    assert [s.rule for s in result.trace.steps] == ["unfold-fold", "unfold-fold"]
    assert result.trace.to_text().splitlines()[-1].startswith("2\t1\t")


def test_zero_normalize_stops_before_the_counted_step():
    run = zero_normalize(App(Lam("x", UNIT, delayed(Var("x"), 1)), UNIT_VAL), 10)
    assert run.reductions == 1
    assert run.pending.kind is StepKind.ONE
    assert run.pending.term == UNIT_VAL


def test_zero_normalize_reaches_values():
    run = zero_normalize(App(Lam("x", BOOL, Var("x")), true()), 10)
    assert run.pending is None


def test_zero_step_loop_exhausts_the_bound():
    with pytest.raises(FuelExhausted):
        zero_normalize(App(OMEGA, OMEGA), 50)


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_big_and_small_step_agree(path):
    entry = compare(path, TEST_FUEL)
    assert entry["failure"] == ""


@pytest.mark.parametrize("name", ["true_after_3", "drain_3", "even_3", "diverge", "snd_lazy"])
def test_subject_reduction(name):
    assert subject_reduction(program(name)) == ""


def test_small_step_values_are_alpha_equal_to_big_step_values():
    term = program("not_fn").term
    assert alpha_eq(eval_big(term, TEST_FUEL).value, eval_small(term, TEST_FUEL).value)
