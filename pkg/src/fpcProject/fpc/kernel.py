"""The guarded delay monad: memoised later-suspensions, ``Now``/``Step`` delays,
the guarded fixpoint and fuel-bounded forcing.

There is a single notion of time: a ``Delay`` is the coinductive stream of
steps, and ``force`` with fuel is the only way to observe it.

``gfix(f)`` expects ``f`` to return without demanding its argument. A demand
made during construction raises ``NonProductiveError``.
"""

from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar, Union

from fpcProject.fpc.errors import NonProductiveError

T = TypeVar("T")
U = TypeVar("U")

_PENDING, _RUNNING, _DONE = 0, 1, 2


class Later(Generic[T]):
    """A value available one step from now. Demanded at most once, then memoised."""

    __slots__ = ("_thunk", "_value", "_state")

    def __init__(self, thunk: Callable[[], T]):
        self._thunk = thunk
        self._value = None
        self._state = _PENDING

    @classmethod
    def ready(cls, value: T) -> "Later[T]":
        later = cls(None)
        later._value = value
        later._state = _DONE
        return later

    @property
    def demanded(self) -> bool:
        return self._state == _DONE

    def force(self) -> T:
        if self._state == _DONE:
            return self._value
        if self._state == _RUNNING:
            raise NonProductiveError("suspension demanded itself while being computed")
        self._state = _RUNNING
        try:
            value = self._thunk()
        except BaseException:
            self._state = _PENDING
            raise
        self._value = value
        self._state = _DONE
        self._thunk = None
        return value

    def map(self, f: Callable[[T], U]) -> "Later[U]":
        return Later(lambda: f(self.force()))

    def ap(self, arg: "Later[Any]") -> "Later[Any]":
        """``self ⊛ arg`` for a suspended function."""
        return Later(lambda: self.force()(arg.force()))

    def __repr__(self) -> str:
        return f"Later({self._value!r})" if self._state == _DONE else "Later(<pending>)"


def next_later(value: T) -> Later[T]:
    return Later.ready(value)


class Delay:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Now(Delay, Generic[T]):
    value: T


@dataclass(frozen=True, slots=True)
class Step(Delay):
    later: Later


def eta(value: T) -> Now:
    return Now(value)


def step_l(suspension: Later) -> Step:
    return Step(suspension)


def delta_l(delay: Delay) -> Step:
    return Step(next_later(delay))


def delay_n(delay: Delay, n: int) -> Delay:
    for _ in range(n):
        delay = delta_l(delay)
    return delay


def gfix(f: Callable[[Later[T]], T]) -> T:
    """Tie ``x = f(next x)`` through a memoised cell."""
    cell: list = []

    def knot() -> T:
        if not cell:
            raise NonProductiveError("guarded fixpoint demanded its own suspension before it was tied")
        return cell[0]

    result = f(Later(knot))
    cell.append(result)
    return result


def bottom() -> Delay:
    """``fix(step_l)``: the delay that never produces a value."""
    return gfix(step_l)


def ext(f: Callable[[Any], U], tick_b: Callable[[Later[U]], U]) -> Callable[[Delay], U]:
    """Homomorphic extension: ``hat(eta a) = f(a)``, ``hat(Step r) = tick_b(r.map(hat))``."""

    def hat(delay: Delay) -> U:
        if isinstance(delay, Now):
            return f(delay.value)
        return tick_b(delay.later.map(hat))

    return hat


def bind(delay: Delay, f: Callable[[Any], Delay]) -> Delay:
    return ext(f, step_l)(delay)


@dataclass(frozen=True)
class Converged(Generic[T]):
    value: T
    steps: int


@dataclass(frozen=True)
class Timeout:
    fuel: int


ForceResult = Union[Converged, Timeout]


def force(delay: Delay, fuel: int) -> ForceResult:
    """Unroll at most ``fuel`` Step layers."""
    if fuel < 0:
        raise ValueError("fuel must be non-negative")
    steps = 0
    while isinstance(delay, Step):
        if steps >= fuel:
            return Timeout(fuel)
        delay = delay.later.force()
        steps += 1
    return Converged(delay.value, steps)


def peel(delay: Delay, limit: int) -> tuple[Delay, int]:
    """Remove up to ``limit`` Step layers; returns the remainder and how many were removed."""
    taken = 0
    while isinstance(delay, Step) and taken < limit:
        delay = delay.later.force()
        taken += 1
    return delay, taken
