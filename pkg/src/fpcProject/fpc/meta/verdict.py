"""Depth-indexed verdicts.

A checker run at depth ``n`` answers "true at stage n". Depth 0 is always
true. A failure is *conclusive* when the inputs are unrelated at every larger
depth too; a failure produced by an unrolling search that ran out of depth is
reported as "fails within depth" and says nothing about larger depths.
"""

from dataclasses import dataclass
from typing import Callable, Iterable


@dataclass(frozen=True)
class Verdict:
    holds: bool
    depth: int
    path: tuple = ()
    reason: str = ""
    conclusive: bool = True

    def __bool__(self) -> bool:
        return self.holds

    def under(self, label: str) -> "Verdict":
        """The same verdict seen from one level up the counterexample path."""
        if self.holds:
            return self
        return Verdict(False, self.depth, (label,) + self.path, self.reason, self.conclusive)

    def at(self, depth: int) -> "Verdict":
        return Verdict(self.holds, depth, self.path, self.reason, self.conclusive)

    @property
    def label(self) -> str:
        if self.holds:
            return "HoldsAt"
        return "FailsAt" if self.conclusive else "FailsWithinDepth"

    def describe(self) -> str:
        if self.holds:
            return f"HoldsAt({self.depth})"
        where = f" at {'.'.join(self.path)}" if self.path else ""
        if self.conclusive:
            return f"FailsAt({self.depth}){where}: {self.reason}"
        return f"fails within depth {self.depth}{where}: {self.reason}"


def holds_at(depth: int) -> Verdict:
    return Verdict(True, depth)


def fails_at(depth: int, reason: str, conclusive: bool = True) -> Verdict:
    return Verdict(False, depth, (), reason, conclusive)


def all_hold(depth: int, checks: Iterable[Callable[[], Verdict]]) -> Verdict:
    """Run ``checks`` lazily; the first failure wins."""
    for check in checks:
        verdict = check()
        if not verdict:
            return verdict.at(depth)
    return holds_at(depth)


def antitone(run: Callable[[int], Verdict], depth: int) -> bool:
    """Re-run a checker at every depth up to ``depth``: a conclusive failure at
    some depth must not be followed by a success at a larger one."""
    failed = False
    for n in range(depth + 1):
        verdict = run(n)
        if verdict.holds and failed:
            return False
        if not verdict.holds and verdict.conclusive:
            failed = True
    return True
