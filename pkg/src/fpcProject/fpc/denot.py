"""Denotational semantics of elaborated terms in the guarded delay monad.

Types are read structurally:

    [[1]]        = DUnit   (a Delay of the unit token)
    [[s + t]]    = DSum    (a Delay of an Injection)
    [[s * t]]    = DPair
    [[s -> t]]   = DFun
    [[mu a. t]]  = DLater  (a suspension of [[t[mu a. t / a]]])

``tick`` is the type-directed algebra map from a suspension to a value, and
``delay_sem`` is ``tick`` after ``next``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from fpcProject.fpc.kernel import (
    Converged,
    Delay,
    ForceResult,
    Later,
    Step,
    eta,
    ext,
    force,
    next_later,
)
from fpcProject.fpc.syntax import TArrow, TMu, TProd, TSum, TUnit, Type, unfold_mu
from fpcProject.fpc.typechecker import (
    CApp,
    CCase,
    CFold,
    CFst,
    CHole,
    CInl,
    CInr,
    CLam,
    CoreTerm,
    CPair,
    CSnd,
    CUnfold,
    CUnit,
    CVar,
)

STAR = "*"


class Side(str, Enum):
    LEFT = "inl"
    RIGHT = "inr"


class SemVal:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Injection:
    side: Side
    value: SemVal


@dataclass(frozen=True, slots=True, eq=False)
class DUnit(SemVal):
    delay: Delay


@dataclass(frozen=True, slots=True, eq=False)
class DSum(SemVal):
    delay: Delay


@dataclass(frozen=True, slots=True, eq=False)
class DPair(SemVal):
    first: SemVal
    second: SemVal


@dataclass(frozen=True, slots=True, eq=False)
class DFun(SemVal):
    fn: Callable[[SemVal], SemVal]

    def __call__(self, arg: SemVal) -> SemVal:
        return self.fn(arg)


@dataclass(frozen=True, slots=True, eq=False)
class DLater(SemVal):
    later: Later


Env = dict


def has_shape(ty: Type, value: SemVal) -> bool:
    match ty:
        case TUnit():
            return isinstance(value, DUnit)
        case TSum():
            return isinstance(value, DSum)
        case TProd():
            return isinstance(value, DPair)
        case TArrow():
            return isinstance(value, DFun)
        case TMu():
            return isinstance(value, DLater)
    return False


def tick(ty: Type, susp: Later) -> SemVal:
    """The algebra map from a suspended value of ``ty`` to a value of ``ty``."""
    match ty:
        case TUnit():
            return DUnit(Step(susp.map(lambda v: v.delay)))
        case TSum():
            return DSum(Step(susp.map(lambda v: v.delay)))
        case TProd(left, right):
            return DPair(tick(left, susp.map(lambda v: v.first)), tick(right, susp.map(lambda v: v.second)))
        case TArrow(_, cod):
            return DFun(lambda x: tick(cod, susp.map(lambda f: f.fn(x))))
        case TMu():
            unfolded = unfold_mu(ty)
            return DLater(susp.map(lambda v: tick(unfolded, v.later)))
    raise TypeError(f"tick needs a closed type, got {ty!r}")


def delay_sem(ty: Type, value: SemVal, times: int = 1) -> SemVal:
    for _ in range(times):
        value = tick(ty, next_later(value))
    return value


def denote(core: CoreTerm, env: Env = None) -> SemVal:
    """Interpret an elaborated term under ``env`` (term variable -> SemVal)."""
    env = {} if env is None else env
    result = _denote(core, env)
    assert has_shape(core.ty, result), f"denotation of shape {type(result).__name__} at {core.ty!r}"
    return result


def _denote(core: CoreTerm, env: Env) -> SemVal:
    match core:
        case CVar(name, _):
            return env[name]
        case CUnit():
            return DUnit(eta(STAR))
        case CInl(arg, _):
            return DSum(eta(Injection(Side.LEFT, denote(arg, env))))
        case CInr(arg, _):
            return DSum(eta(Injection(Side.RIGHT, denote(arg, env))))
        case CPair(first, second, _):
            return DPair(denote(first, env), denote(second, env))
        case CFst(arg, _):
            return denote(arg, env).first
        case CSnd(arg, _):
            return denote(arg, env).second
        case CLam(var, _, body, _):
            return DFun(lambda x: denote(body, {**env, var: x}))
        case CApp(fn, arg, _):
            return denote(fn, env).fn(denote(arg, env))
        case CFold(arg, _):
            return DLater(Later(lambda: denote(arg, env)))
        case CUnfold(arg, unfolded):
            return tick(unfolded, denote(arg, env).later)
        case CCase(scrutinee, x1, left, x2, right, ty):

            def branch(inj: Injection) -> SemVal:
                if inj.side is Side.LEFT:
                    return denote(left, {**env, x1: inj.value})
                return denote(right, {**env, x2: inj.value})

            return ext(branch, lambda susp: tick(ty, susp))(denote(scrutinee, env).delay)
        case CHole():
            raise ValueError("cannot interpret a hole")
    raise TypeError(f"Unexpected core term: {core!r}")


def observe_unit(value: SemVal, fuel: int) -> ForceResult:
    if not isinstance(value, DUnit):
        raise TypeError("observe_unit expects a denotation of type 1")
    return force(value.delay, fuel)


def observe_bool(value: SemVal, fuel: int) -> ForceResult:
    """Converged(side, steps); the payload is left unforced."""
    if not isinstance(value, DSum):
        raise TypeError("observe_bool expects a denotation of a sum type")
    result = force(value.delay, fuel)
    if isinstance(result, Converged):
        return Converged(result.value.side, result.steps)
    return result


def ground_delay(value: SemVal) -> Delay:
    """The outer Delay of a unit or sum denotation."""
    if isinstance(value, (DUnit, DSum)):
        return value.delay
    raise TypeError(f"{type(value).__name__} is not a ground denotation")


def observe(ty: Type, value: SemVal, fuel: int) -> ForceResult:
    """Observe a ground denotation: the unit token or the injection side, with its step count."""
    if isinstance(ty, TUnit):
        return observe_unit(value, fuel)
    if isinstance(ty, TSum):
        return observe_bool(value, fuel)
    raise TypeError("only unit and sum types are observable")
