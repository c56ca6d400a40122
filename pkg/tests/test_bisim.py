import pytest

from fpcProject.components.bisimulation import delay_suite, not_reflexive_fn, reflexivity
from fpcProject.fpc.denot import STAR, delay_sem, denote
from fpcProject.fpc.kernel import bottom, delay_n, eta
from fpcProject.fpc.meta.battery import Battery
from fpcProject.fpc.meta.bisim import Bisimulation, bisim, lift_rel
from fpcProject.fpc.meta.laws import delta_insensitive
from fpcProject.fpc.meta.verdict import fails_at, holds_at
from fpcProject.fpc.prelude import BOOL, NAT, false, numeral, true
from fpcProject.fpc.syntax import UNIT, TArrow
from fpcProject.fpc.typechecker import EMPTY_CTX, check

from conftest import CORPUS, TEST_DEPTH, program


def _eq(a, b, n):
    return holds_at(n) if a == b else fails_at(n, "differ")


def test_delays_are_bisimilar():
    for a, b in [(0, 0), (0, 5), (3, 1), (7, 7)]:
        assert lift_rel(_eq, delay_n(eta(STAR), a), delay_n(eta(STAR), b), max(a, b) + 1)


def test_depth_zero_always_holds():
    assert lift_rel(_eq, eta(1), eta(2), 0)
    assert bisim(BOOL, denote(check(EMPTY_CTX, true(), BOOL)), denote(check(EMPTY_CTX, false(), BOOL)), 0)


def test_bottom_is_bisimilar_to_itself():
    assert lift_rel(_eq, bottom(), bottom(), 100)


def test_value_against_bottom_fails_within_depth():
    verdict = lift_rel(_eq, eta(STAR), bottom(), 10)
    assert not verdict
    assert not verdict.conclusive
    assert verdict.label == "FailsWithinDepth"


def test_different_sides_fail_conclusively():
    left = denote(check(EMPTY_CTX, true(), BOOL))
    right = denote(check(EMPTY_CTX, false(), BOOL))
    verdict = bisim(BOOL, left, right, 5)
    assert not verdict
    assert verdict.label == "FailsAt"


def test_delayed_true_is_bisimilar_to_true():
    assert bisim(BOOL, denote(program("true").core), denote(program("true_after_3").core), 30)


def test_numerals_are_compared_under_unfold():
    one, two = (denote(check(EMPTY_CTX, numeral(i), NAT)) for i in (1, 2))
    assert bisim(NAT, one, one, 10)
    verdict = bisim(NAT, one, two, 10)
    assert not verdict
    assert verdict.path[0] == "unfold"


def test_reflexivity_needs_the_delay_sensitive_argument():
    f = not_reflexive_fn()
    verdict = Bisimulation(Battery()).check(TArrow(UNIT, UNIT), f, f, 2)
    assert not verdict
    assert verdict.path[0].startswith("arg[")


def test_delay_suite():
    assert delay_suite(depth_bound=6, bottom_depth=20) == []


def test_delta_insensitivity():
    assert delta_insensitive(BOOL, true(), 0, 4, 10)
    assert delta_insensitive(NAT, numeral(2), 3, 1, 10)


def test_symmetry_against_a_delay():
    value = denote(program("not_fn").core)
    ty = program("not_fn").ty
    forward = bisim(ty, value, delay_sem(ty, value), 8)
    backward = bisim(ty, delay_sem(ty, value), value, 8)
    assert forward.label == backward.label == "HoldsAt"


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.stem)
def test_corpus_denotations_are_reflexive(path):
    entry = reflexivity((path, TEST_DEPTH, 6, 8))
    assert entry["failure"] == ""
