"""Finite reading of the guarded transitive closure ``M =>^k N``.

``M =>^0 N`` is ``M ->*0 N``. ``M =>^(k+1) N`` asks for ``M ->*0 M' ->1 M''``
and ``M'' =>^k N`` one depth later. At depth ``n`` only the first ``n``
counted steps of the claim are examined.
"""

from fpcProject.constants import DEFAULT_ZERO_STEP_BOUND
from fpcProject.fpc.meta.verdict import Verdict, fails_at, holds_at
from fpcProject.fpc.opsem import NORMAL_FORM, StepKind, step, zero_normalize
from fpcProject.fpc.syntax import Term, alpha_eq, strip_ascriptions


def _zero_reaches(term: Term, target: Term, bound: int) -> bool:
    current = term
    for _ in range(bound + 1):
        if alpha_eq(current, target):
            return True
        reduct = step(current)
        if reduct is NORMAL_FORM or reduct.kind is StepKind.ONE:
            return False
        current = reduct.term
    return False


def guarded_closure(term: Term, k: int, target: Term, depth: int, bound: int = DEFAULT_ZERO_STEP_BOUND) -> Verdict:
    current = strip_ascriptions(term)
    target = strip_ascriptions(target)
    for taken in range(depth):
        if taken == k:
            if _zero_reaches(current, target, bound):
                return holds_at(depth)
            return fails_at(depth, f"the target is not reached by free steps after {k} counted steps")
        run = zero_normalize(current, bound)
        if run.pending is None:
            return fails_at(depth, f"a value was reached after {taken} of {k} counted steps")
        current = run.pending.term
    return holds_at(depth)
