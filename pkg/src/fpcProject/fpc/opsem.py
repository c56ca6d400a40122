"""Call-by-name operational semantics with fold-unfold step counting.

Only the contraction ``unfold (fold M) -> M`` is counted (StepKind.ONE); every
other reduction is free. Evaluation contexts are

    E ::= [.] | E M | case E of {...} | fst E | snd E | unfold E | (E : T)

The ascription frame only matters for terms that still carry ascriptions; the
evaluators erase them on entry.
"""

import json
import logging
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Callable, Optional, Union

from fpcProject import logger
from fpcProject.fpc.errors import FuelExhausted, StuckError
from fpcProject.fpc.syntax import (
    App,
    Ascribe,
    Case,
    Fold,
    Fst,
    Hole,
    Inl,
    Inr,
    Lam,
    Pair,
    Snd,
    Term,
    Unfold,
    Var,
    is_value,
    strip_ascriptions,
    subst_term,
)


class StepKind(IntEnum):
    ZERO = 0
    ONE = 1


@dataclass(frozen=True)
class Reduct:
    term: Term
    kind: StepKind
    path: tuple
    rule: str


class NormalForm:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "NormalForm"


NORMAL_FORM = NormalForm()


def _bare(term: Term) -> Term:
    while isinstance(term, Ascribe) and is_value(term.term):
        term = term.term
    return term


def _principal(redex: Term) -> Term:
    """``redex`` with ascriptions on its principal value argument dropped."""
    match redex:
        case App(Ascribe() as fn, arg):
            return App(_bare(fn), arg)
        case Case(Ascribe() as scrutinee, x1, left, x2, right):
            return Case(_bare(scrutinee), x1, left, x2, right)
        case Fst(Ascribe() as arg) | Snd(Ascribe() as arg) | Unfold(Ascribe() as arg):
            return type(redex)(_bare(arg))
    return redex


def _contract(redex: Term) -> Optional[tuple[Term, StepKind, str]]:
    """Contract ``redex`` if its head is a value of the right shape."""
    match _principal(redex):
        case App(Lam(var, _, body), arg):
            return subst_term(body, arg, var), StepKind.ZERO, "beta"
        case Fst(Pair(first, _)):
            return first, StepKind.ZERO, "fst"
        case Snd(Pair(_, second)):
            return second, StepKind.ZERO, "snd"
        case Case(Inl(arg), x1, left, _, _):
            return subst_term(left, arg, x1), StepKind.ZERO, "case-inl"
        case Case(Inr(arg), _, _, x2, right):
            return subst_term(right, arg, x2), StepKind.ZERO, "case-inr"
        case Unfold(Fold(arg)):
            return arg, StepKind.ONE, "unfold-fold"
        case Ascribe(inner, _) if is_value(inner):
            return inner, StepKind.ZERO, "ascribe"
    return None


def _frame(term: Term) -> Optional[tuple[str, Term, Callable[[Term], Term]]]:
    """The evaluation-context frame at the head of ``term``: (label, hole content, plug)."""
    match term:
        case App(fn, arg):
            return "fn", fn, lambda t: App(t, arg)
        case Case(scrutinee, x1, left, x2, right):
            return "scrutinee", scrutinee, lambda t: Case(t, x1, left, x2, right)
        case Fst(arg):
            return "arg", arg, Fst
        case Snd(arg):
            return "arg", arg, Snd
        case Unfold(arg):
            return "arg", arg, Unfold
        case Ascribe(inner, ty):
            return "term", inner, lambda t: Ascribe(t, ty)
    return None


def step(term: Term) -> Union[Reduct, NormalForm]:
    """One small step of a closed term, or NORMAL_FORM when it is a value."""
    if is_value(term):
        return NORMAL_FORM
    plugs: list = []
    path: list = []
    current = term
    while True:
        contracted = _contract(current)
        if contracted is not None:
            result, kind, rule = contracted
            for plug in reversed(plugs):
                result = plug(result)
            return Reduct(result, kind, tuple(path), rule)
        frame = _frame(current)
        if frame is None:
            raise StuckError(current, _stuck_reason(current))
        label, inner, plug = frame
        if is_value(inner):
            raise StuckError(current, _stuck_reason(current))
        plugs.append(plug)
        path.append(label)
        current = inner


def _stuck_reason(term: Term) -> str:
    from fpcProject.fpc.surface import print_term

    match term:
        case Var(name):
            return f"free variable {name}"
        case Hole():
            return "cannot evaluate a hole"
    return f"no reduction rule applies to `{print_term(term)}`"


# ---------------------------------------------------------------- traces


@dataclass(frozen=True)
class TraceStep:
    path: tuple
    kind: StepKind
    rule: str
    term: Term


@dataclass
class Trace:
    initial: Term
    steps: list = field(default_factory=list)

    @property
    def k(self) -> int:
        return sum(1 for s in self.steps if s.kind is StepKind.ONE)

    def to_text(self) -> str:
        from fpcProject.fpc.surface import print_term

        lines = [f"0\t-\t\t\t{print_term(self.initial)}"]
        for i, s in enumerate(self.steps, start=1):
            lines.append(f"{i}\t{int(s.kind)}\t{'.'.join(s.path) or '.'}\t{s.rule}\t{print_term(s.term)}")
        return "\n".join(lines)

    def to_records(self) -> list:
        from fpcProject.fpc.surface import print_term

        return [
            {"path": ".".join(s.path) or ".", "kind": int(s.kind), "rule": s.rule, "term": print_term(s.term)}
            for s in self.steps
        ]

    def to_json(self) -> str:
        from fpcProject.fpc.surface import print_term

        return json.dumps({"initial": print_term(self.initial), "k": self.k, "steps": self.to_records()}, indent=2)


@dataclass(frozen=True)
class Evaluated:
    value: Term
    k: int
    reductions: int
    trace: Optional[Trace] = None


@dataclass(frozen=True)
class EvalTimeout:
    fuel: int
    k: Optional[int] = None


def eval_small(term: Term, max_steps: int, record_trace: bool = True) -> Union[Evaluated, EvalTimeout]:
    """Iterate ``step`` to a value; ``max_steps`` bounds reductions of both kinds."""
    current = strip_ascriptions(term)
    trace = Trace(current) if record_trace else None
    k = 0
    debug = logger.isEnabledFor(logging.DEBUG)
    for n in range(max_steps + 1):
        reduct = step(current)
        if reduct is NORMAL_FORM:
            return Evaluated(current, k, n, trace)
        if n == max_steps:
            break
        k += reduct.kind
        current = reduct.term
        if trace is not None:
            trace.steps.append(TraceStep(reduct.path, reduct.kind, reduct.rule, current))
        if debug:
            logger.debug(f"step {n + 1}: {reduct.rule} at {'.'.join(reduct.path) or '.'}")
    logger.info(f"small-step evaluation timed out after {max_steps} reductions (k={k})")
    return EvalTimeout(max_steps, k)


class _OutOfFuel(Exception):
    pass


class _BigStep:
    """Big-step rules; each loop iteration is one rule application. Premises
    in tail position are evaluated by the loop, the others recursively."""

    def __init__(self, fuel: int):
        self.fuel = fuel
        self.used = 0

    def run(self, term: Term) -> tuple[Term, int]:
        k = 0
        while True:
            if self.used >= self.fuel:
                raise _OutOfFuel()
            self.used += 1
            if is_value(term):
                return term, k
            match term:
                case App(fn, arg):
                    head, j = self.run(fn)
                    k += j
                    if not isinstance(head, Lam):
                        raise StuckError(term, "application of a non-function")
                    term = subst_term(head.body, arg, head.var)
                case Fst(arg) | Snd(arg):
                    head, j = self.run(arg)
                    k += j
                    if not isinstance(head, Pair):
                        raise StuckError(term, "projection from a non-pair")
                    term = head.first if isinstance(term, Fst) else head.second
                case Case(scrutinee, x1, left, x2, right):
                    head, j = self.run(scrutinee)
                    k += j
                    if isinstance(head, Inl):
                        term = subst_term(left, head.arg, x1)
                    elif isinstance(head, Inr):
                        term = subst_term(right, head.arg, x2)
                    else:
                        raise StuckError(term, "case on a non-injection")
                case Unfold(arg):
                    head, j = self.run(arg)
                    if not isinstance(head, Fold):
                        raise StuckError(term, "unfold of a non-fold")
                    k += j + 1
                    term = head.arg
                case Ascribe(inner, _):
                    term = inner
                case _:
                    raise StuckError(term, _stuck_reason(term))


def eval_big(term: Term, fuel: int) -> Union[Evaluated, EvalTimeout]:
    """``M ⇓ᵏ v``; ``fuel`` bounds the number of rule applications."""
    machine = _BigStep(fuel)
    try:
        value, k = machine.run(strip_ascriptions(term))
    except _OutOfFuel:
        logger.info(f"big-step evaluation timed out after {fuel} rule applications")
        return EvalTimeout(fuel)
    return Evaluated(value, k, machine.used)


@dataclass(frozen=True)
class ZeroRun:
    """Result of ``M →*⁰ M'``: the term reached and the pending one-step, if any."""

    term: Term
    reductions: int
    pending: Optional[Reduct]


def zero_normalize(term: Term, bound: int) -> ZeroRun:
    """Run free reductions until a value or an ``unfold (fold M)`` redex is reached."""
    current = term
    for n in range(bound + 1):
        reduct = step(current)
        if reduct is NORMAL_FORM:
            return ZeroRun(current, n, None)
        if reduct.kind is StepKind.ONE:
            return ZeroRun(current, n, reduct)
        current = reduct.term
    raise FuelExhausted(bound, f"more than {bound} zero-steps without reaching a value or a fold-unfold step")
