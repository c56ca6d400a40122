import pytest

from fpcProject.fpc.errors import NonProductiveError
from fpcProject.fpc.kernel import (
    Converged,
    Later,
    Now,
    Step,
    Timeout,
    bind,
    bottom,
    delay_n,
    delta_l,
    eta,
    ext,
    force,
    gfix,
    peel,
    step_l,
)


def test_force_counts_steps():
    assert force(eta(7), 0) == Converged(7, 0)
    assert force(delay_n(eta(7), 3), 3) == Converged(7, 3)
    assert force(delay_n(eta(7), 3), 2) == Timeout(2)


def test_force_rejects_negative_fuel():
    with pytest.raises(ValueError):
        force(eta(1), -1)


def test_bottom_never_converges():
    assert force(bottom(), 200) == Timeout(200)
    d = bottom()
    assert isinstance(d, Step)
    assert d.later.force() is d


def test_later_is_memoised():
    calls = []
    later = Later(lambda: calls.append(1) or len(calls))
    assert not later.demanded
    assert later.force() == 1
    assert later.force() == 1
    assert later.demanded
    assert calls == [1]


def test_later_map_is_lazy():
    calls = []
    mapped = Later.ready(2).map(lambda x: calls.append(x) or x * 10)
    assert calls == []
    assert mapped.force() == 20


def test_gfix_ties_the_knot():
    stream = gfix(lambda rest: (1, rest))
    assert stream[1].force() is stream


def test_gfix_rejects_non_productive_definitions():
    with pytest.raises(NonProductiveError):
        gfix(lambda rest: rest.force())


def test_ext_adds_the_steps_of_its_argument():
    hat = ext(lambda a: delay_n(eta(a + 1), 2), step_l)
    assert force(hat(delay_n(eta(1), 3)), 10) == Converged(2, 5)


def test_bind_laws():
    f = lambda a: delta_l(eta(a * 2))
    assert force(bind(eta(3), f), 5) == force(f(3), 5)
    assert force(bind(delay_n(eta(3), 2), eta), 5) == Converged(3, 2)
    assert force(bind(bottom(), f), 50) == Timeout(50)


def test_peel():
    rest, taken = peel(delay_n(eta("x"), 4), 3)
    assert taken == 3
    assert force(rest, 1) == Converged("x", 1)
    assert peel(eta("x"), 5) == (Now("x"), 0)
