"""JSON report schemas. Every ``--json`` output and every stage artifact is one
of these models dumped with ``model_dump_json(indent=2)``."""

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class Report(BaseModel):
    model_config = ConfigDict(frozen=True)


class TraceStepReport(Report):
    path: str
    kind: int = Field(..., ge=0, le=1)
    rule: str
    term: str


class TraceReport(Report):
    initial: str
    k: int
    steps: list[TraceStepReport] = []


class CheckReport(Report):
    file: str
    type: str
    core: Optional[str] = None


class RunReport(Report):
    file: str
    mode: Literal["big", "small"]
    status: Literal["value", "timeout"]
    value: Optional[str] = None
    k: Optional[int] = None
    reductions: Optional[int] = None
    fuel: Optional[int] = None
    trace: Optional[TraceReport] = None


class ObservationReport(Report):
    file: str
    type: str
    verdict: Literal["converged", "timeout"]
    steps: Optional[int] = None
    fuel: Optional[int] = None
    side: Optional[Literal["inl", "inr"]] = None


class AdequacyReport(Report):
    file: str
    type: str
    fuel: int
    operational_k: Optional[int] = None
    denotational_steps: Optional[int] = None
    status: Literal["MATCH", "MISMATCH", "TIMEOUT"]


class VerdictReport(Report):
    relation: Literal["logrel", "bisim", "closure"]
    type: str
    depth: int
    verdict: Literal["HoldsAt", "FailsAt", "FailsWithinDepth"]
    counterexample_path: Optional[list[str]] = None
    reason: Optional[str] = None


class ExecReport(Report):
    file: str
    n: int
    result: Literal["inl", "inr", "more"]


class ContextOutcomeReport(Report):
    index: int
    status: Literal["agree", "unknown", "ill-typed"]
    left_steps: Optional[int] = None
    right_steps: Optional[int] = None
    timed_out: list[str] = []


class ContextSuiteReport(Report):
    left: str
    right: str
    type: Optional[str] = None
    fuel: int
    contexts: int
    agreed: int
    unknown: int
    ill_typed: int
    outcomes: list[ContextOutcomeReport] = []


class StageSummary(Report):
    stage: str
    checked: int
    passed: int
    failed: int
    skipped: int = 0
    failures: list[str] = []
    metrics: dict = {}


class SweepReport(Report):
    stages: list[StageSummary]

    @property
    def failed(self) -> int:
        return sum(s.failed for s in self.stages)
