"""Conversions from evaluator and checker results to the report models."""

from typing import Optional

from fpcProject.entity.reports import (
    ContextOutcomeReport,
    ContextSuiteReport,
    ObservationReport,
    RunReport,
    TraceReport,
    TraceStepReport,
    VerdictReport,
)
from fpcProject.fpc.denot import Side
from fpcProject.fpc.kernel import Converged, ForceResult
from fpcProject.fpc.meta.contexts import SuiteResult
from fpcProject.fpc.meta.verdict import Verdict
from fpcProject.fpc.opsem import Evaluated, Trace
from fpcProject.fpc.surface import print_term, print_type
from fpcProject.fpc.syntax import Type


def trace_report(trace: Trace) -> TraceReport:
    return TraceReport(
        initial=print_term(trace.initial),
        k=trace.k,
        steps=[TraceStepReport(**record) for record in trace.to_records()],
    )


def run_report(file: str, mode: str, result, with_trace: bool = False) -> RunReport:
    if isinstance(result, Evaluated):
        return RunReport(
            file=file,
            mode=mode,
            status="value",
            value=print_term(result.value),
            k=result.k,
            reductions=result.reductions,
            trace=trace_report(result.trace) if with_trace and result.trace is not None else None,
        )
    return RunReport(file=file, mode=mode, status="timeout", fuel=result.fuel)


def observation_report(file: str, ty: Type, result: ForceResult) -> ObservationReport:
    if isinstance(result, Converged):
        side = result.value.value if isinstance(result.value, Side) else None
        return ObservationReport(file=file, type=print_type(ty), verdict="converged", steps=result.steps, side=side)
    return ObservationReport(file=file, type=print_type(ty), verdict="timeout", fuel=result.fuel)


def verdict_report(relation: str, ty: Type, verdict: Verdict) -> VerdictReport:
    return VerdictReport(
        relation=relation,
        type=print_type(ty),
        depth=verdict.depth,
        verdict=verdict.label,
        counterexample_path=None if verdict.holds else list(verdict.path),
        reason=None if verdict.holds else verdict.reason,
    )


def suite_report(left: str, right: str, ty: Optional[Type], fuel: int, result: SuiteResult) -> ContextSuiteReport:
    return ContextSuiteReport(
        left=left,
        right=right,
        type=print_type(ty) if ty is not None else None,
        fuel=fuel,
        contexts=len(result.outcomes),
        agreed=result.agreed,
        unknown=result.unknown,
        ill_typed=result.ill_typed,
        outcomes=[
            ContextOutcomeReport(
                index=o.index,
                status=o.status,
                left_steps=o.left_steps,
                right_steps=o.right_steps,
                timed_out=list(o.timed_out),
            )
            for o in result.outcomes
        ],
    )
