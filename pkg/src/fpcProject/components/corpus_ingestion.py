from dataclasses import dataclass
from pathlib import Path

from fpcProject import logger
from fpcProject.entity import CorpusIngestionConfig
from fpcProject.entity.reports import StageSummary
from fpcProject.fpc.errors import FPCError, NestingTooDeep, UsageError
from fpcProject.fpc.surface import load_program, print_type
from fpcProject.fpc.syntax import Term, TSum, TUnit, term_size
from fpcProject.fpc.typechecker import CoreTerm, typecheck_closed
from fpcProject.utils.common import list_sources, save_json


@dataclass(frozen=True)
class Program:
    """A parsed, type-checked corpus program."""

    name: str
    path: Path
    term: Term
    core: CoreTerm

    @property
    def ty(self):
        return self.core.ty

    @property
    def ground(self) -> bool:
        return isinstance(self.ty, (TUnit, TSum))


def load_checked(path: Path) -> Program:
    try:
        source = load_program(Path(path))
    except RecursionError:
        raise NestingTooDeep(str(path)) from None
    if source.main is None:
        raise UsageError(f"{path}: no main term (add a trailing term or `let main = ...;;`)")
    try:
        core = typecheck_closed(source.main)
    except RecursionError:
        raise NestingTooDeep(str(path)) from None
    return Program(Path(path).name, Path(path), source.main, core)


def corpus_files(corpus_dir: Path) -> list:
    return list_sources(Path(corpus_dir), ".fpc")


class CorpusIngestion:
    def __init__(self, config: CorpusIngestionConfig):
        self.config = config

    def ingest(self) -> StageSummary:
        entries, failures = [], []
        for path in corpus_files(self.config.corpus_dir):
            try:
                program = load_checked(path)
            except FPCError as e:
                logger.warning(f"{path.name}: {e}")
                failures.append(f"{path.name}: {e}")
                entries.append({"file": path.name, "error": str(e)})
                continue
            entries.append({
                "file": program.name,
                "type": print_type(program.ty),
                "ground": program.ground,
                "size": term_size(program.term),
            })

        logger.info(f"ingested {len(entries) - len(failures)} of {len(entries)} corpus programs")
        summary = StageSummary(
            stage="corpus_ingestion",
            checked=len(entries),
            passed=len(entries) - len(failures),
            failed=len(failures),
            failures=failures,
        )
        save_json(path=Path(self.config.report_file), data={"programs": entries, "summary": summary.model_dump()})
        return summary
