from dataclasses import dataclass, field
from pathlib import Path


@dataclass(frozen=True)
class CorpusIngestionConfig:
    root_dir: Path
    corpus_dir: Path
    report_file: Path


@dataclass(frozen=True)
class OperationalAgreementConfig:
    root_dir: Path
    corpus_dir: Path
    report_file: Path
    fuel: int
    jobs: int


@dataclass(frozen=True)
class AdequacyConfig:
    root_dir: Path
    corpus_dir: Path
    report_file: Path
    fuel: int
    homomorphism_instances: int
    seed: int
    jobs: int


@dataclass(frozen=True)
class LogicalRelationConfig:
    root_dir: Path
    corpus_dir: Path
    report_file: Path
    depth: int
    zero_step_bound: int
    battery_size: int
    battery_limit: int
    jobs: int


@dataclass(frozen=True)
class BisimulationConfig:
    root_dir: Path
    corpus_dir: Path
    report_file: Path
    depth: int
    battery_size: int
    battery_limit: int
    jobs: int


@dataclass(frozen=True)
class ExecutorConfig:
    root_dir: Path
    corpus_dir: Path
    report_file: Path
    exec_max: int
    fuel: int
    jobs: int


@dataclass(frozen=True)
class ContextEquivalenceConfig:
    root_dir: Path
    context_dir: Path
    report_file: Path
    fuel: int
    depth: int
    suites: dict
    pairs: list = field(default_factory=list)
