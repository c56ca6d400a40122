"""Running a boolean denotation one step at a time."""

from dataclasses import dataclass
from typing import Union

from fpcProject.fpc.denot import Side
from fpcProject.fpc.kernel import Delay, Now


@dataclass(frozen=True)
class Done:
    side: Side


@dataclass(frozen=True)
class More:
    delay: Delay


def runstep(delay: Delay) -> Union[Done, More]:
    """A value now is decided (its payload is discarded); otherwise advance one step."""
    if isinstance(delay, Now):
        return Done(delay.value.side)
    return More(delay.later.force())


def exec_(n: int, delay: Delay) -> Union[Done, More]:
    """``exec 0 x = runstep x``; ``exec (n+1) x = exec n y`` when ``runstep x = More y``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    for _ in range(n + 1):
        result = runstep(delay)
        if isinstance(result, Done):
            return result
        delay = result.delay
    return result
