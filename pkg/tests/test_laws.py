import pytest

from fpcProject.components.adequacy import homomorphism_laws, ifz_step_law
from fpcProject.fpc.denot import Side, denote, observe
from fpcProject.fpc.kernel import Converged, delay_n, eta
from fpcProject.fpc.meta import laws
from fpcProject.fpc.opsem import eval_big
from fpcProject.fpc.prelude import BOOL, delayed, false, ifz, numeral, true
from fpcProject.fpc.surface import parse_term
from fpcProject.fpc.syntax import UNIT_VAL, Case, Var
from fpcProject.fpc.typechecker import EMPTY_CTX, check, infer


def test_unfold_fold_is_one_delay():
    assert laws.unfold_fold_is_delay(true(), 100)
    assert laws.unfold_fold_is_delay(delayed(UNIT_VAL, 3), 100)


def test_case_commutes_with_delay():
    term = parse_term("case (inl () : 1 + 1) of { inl x => unfold (fold x) | inr y => y }")
    assert laws.case_commutes_with_delay(term, 100)


def test_unfold_commutes_with_delay():
    assert laws.unfold_commutes_with_delay(laws.folded(true(), BOOL), 100)


def test_ext_adds_one_step_per_delay():
    result = laws.ext_adds_one_step(3, lambda a: delay_n(eta(a + 1), 2), 4, 100)
    assert result
    assert result.right.steps == 6


def test_counted_reduction_removes_one_delay():
    result = laws.reduction_preserves_denotation(delayed(false(), 2), 100)
    assert result
    assert result.description == "unfold-fold step"


def test_free_reduction_keeps_the_observation():
    term = parse_term("(fn b : 1 + 1 => unfold (fold b)) (inr () : 1 + 1)")
    assert laws.reduction_preserves_denotation(term, 100)


def test_values_trivially_preserve_their_denotation():
    assert laws.reduction_preserves_denotation(UNIT_VAL, 10).description == "value"


def test_substitution_lemma():
    body = Case(Var("x"), "l", delayed(Var("l"), 1), "r", UNIT_VAL)
    assert laws.substitution_lemma(body, "x", BOOL, delayed(true(), 2), 100)


def test_law_checks_reject_unobservable_types():
    with pytest.raises(TypeError):
        laws.unfold_fold_is_delay(parse_term("fn x : 1 => x"), 10)


def test_sampler_is_deterministic_and_well_typed():
    first, second = laws.TermSampler(7), laws.TermSampler(7)
    for _ in range(20):
        ty = first.ground_type()
        assert ty == second.ground_type()
        term = first.term(ty)
        assert term == second.term(ty)
        assert infer(EMPTY_CTX, term) == ty


def test_ifz_step_law():
    assert ifz_step_law(laws.TermSampler(1), 5, 2000) == []


def test_ifz_counts_the_steps_of_a_delayed_scrutinee():
    term = ifz(delayed(numeral(2), 2), true(), false())
    assert eval_big(term, 1000).k == 3
    assert observe(BOOL, denote(check(EMPTY_CTX, term, BOOL)), 1000) == Converged(Side.RIGHT, 3)


def test_homomorphism_laws_hold_on_random_instances():
    failures = homomorphism_laws(laws.TermSampler(0), 25, 2000)
    assert failures == {name: [] for name in failures}
