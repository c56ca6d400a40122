"""``fpc``: command-line front end.

Exit codes: 0 success, 1 failed check, 2 usage/parse/type error, 3 timeout.
Reports go to stdout (JSON with ``--json``); diagnostics go to stderr.
"""

import argparse
import sys
from pathlib import Path

from fpcProject import logger
from fpcProject.components.adequacy import adequacy
from fpcProject.components.context_equivalence import load_contexts
from fpcProject.components.corpus_ingestion import load_checked
from fpcProject.components.executor import exec_report
from fpcProject.config.configuration import DEFAULT_PARAMS, DEFAULT_SCHEMA, read_yaml_or_default
from fpcProject.constants import (
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_TIMEOUT,
    EXIT_USAGE,
    PARAMS_FILE_PATH,
    SCHEMA_FILE_PATH,
)
from fpcProject.entity.reports import CheckReport, SweepReport
from fpcProject.fpc.denot import Side, denote, ground_delay, observe
from fpcProject.fpc.errors import FPCError, NestingTooDeep, UsageError
from fpcProject.fpc.kernel import Converged
from fpcProject.fpc.meta.battery import Battery
from fpcProject.fpc.meta.bisim import bisim
from fpcProject.fpc.meta.contexts import ctx_equiv_suite
from fpcProject.fpc.meta.executor import Done, exec_
from fpcProject.fpc.opsem import EvalTimeout, eval_big, eval_small
from fpcProject.fpc.surface import parse_type, print_type
from fpcProject.fpc.syntax import TSum, TUnit, alpha_eq_type, canonical_type
from fpcProject.fpc.typechecker import print_core
from fpcProject.utils.common import list_sources
from fpcProject.utils.reporting import observation_report, run_report, suite_report, verdict_report


def _emit(args, report, text: str) -> None:
    print(report.model_dump_json(indent=2) if args.json else text)


def _ground(program) -> None:
    if not isinstance(program.ty, (TUnit, TSum)):
        raise UsageError(f"{program.name} has type {print_type(program.ty)}; only 1 and sum types are observable")


# ---------------------------------------------------------------- commands


def cmd_check(args) -> int:
    program = load_checked(args.file)
    core = print_core(program.core) if args.core else None
    text = print_type(program.ty) if core is None else f"{print_type(program.ty)}\n{core}"
    _emit(args, CheckReport(file=program.name, type=print_type(program.ty), core=core), text)
    return EXIT_OK


def cmd_run(args) -> int:
    program = load_checked(args.file)
    if args.trace or args.small:
        result, mode = eval_small(program.term, args.fuel, record_trace=args.trace), "small"
    else:
        result, mode = eval_big(program.term, args.fuel), "big"
    report = run_report(program.name, mode, result, with_trace=args.trace)
    if isinstance(result, EvalTimeout):
        _emit(args, report, f"Timeout (fuel {args.fuel})")
        return EXIT_TIMEOUT
    text = f"{report.value}\nk={report.k}"
    if args.trace:
        text = f"{result.trace.to_text()}\n{text}"
    _emit(args, report, text)
    return EXIT_OK


def cmd_denote(args) -> int:
    program = load_checked(args.file)
    _ground(program)
    result = observe(program.ty, denote(program.core), args.fuel)
    report = observation_report(program.name, program.ty, result)
    if not isinstance(result, Converged):
        _emit(args, report, f"Timeout (fuel {args.fuel})")
        return EXIT_TIMEOUT
    side = f"{result.value.value} " if isinstance(result.value, Side) else ""
    _emit(args, report, f"{side}steps={result.steps}")
    return EXIT_OK


def cmd_adequacy(args) -> int:
    program = load_checked(args.file)
    _ground(program)
    report = adequacy(program, args.fuel)
    if report.status == "TIMEOUT":
        _emit(args, report, f"Timeout (fuel {args.fuel})")
        return EXIT_TIMEOUT
    text = f"operational k={report.operational_k}, denotational steps={report.denotational_steps}, {report.status}"
    _emit(args, report, text)
    return EXIT_OK if report.status == "MATCH" else EXIT_CHECK_FAILED


def cmd_bisim(args) -> int:
    left, right = load_checked(args.left), load_checked(args.right)
    if not alpha_eq_type(left.ty, right.ty):
        raise UsageError(f"types differ: {print_type(left.ty)} vs {print_type(right.ty)}")
    verdict = bisim(left.ty, denote(left.core), denote(right.core), args.depth, Battery())
    _emit(args, verdict_report("bisim", left.ty, verdict), verdict.describe())
    return EXIT_OK if verdict else EXIT_CHECK_FAILED


def cmd_exec(args) -> int:
    program = load_checked(args.file)
    if not isinstance(program.ty, TSum):
        raise UsageError(f"exec needs a program of sum type, got {print_type(program.ty)}")
    result = exec_(args.fuel, ground_delay(denote(program.core)))
    report = exec_report(program.name, args.fuel, result)
    if not isinstance(result, Done):
        _emit(args, report, "More (not yet decided)")
        return EXIT_TIMEOUT
    _emit(args, report, f"{result.side.value} ({'true' if result.side is Side.LEFT else 'false'})")
    return EXIT_OK


def _suite_files(path: Path, ty) -> tuple:
    """The context files to run, and whether they were picked for ``ty``."""
    if path.is_file():
        return [path], True
    if not path.is_dir():
        raise UsageError(f"{path}: no such context file or directory")
    schema = read_yaml_or_default(SCHEMA_FILE_PATH, DEFAULT_SCHEMA)
    for type_text, name in schema.get("CONTEXT_SUITES", {}).items():
        if canonical_type(parse_type(type_text)) == canonical_type(ty) and (path / name).is_file():
            return [path / name], True
    return list_sources(path, ".ctx"), False


def cmd_ctx_equiv(args) -> int:
    left, right = load_checked(args.left), load_checked(args.right)
    if not alpha_eq_type(left.ty, right.ty):
        raise UsageError(f"types differ: {print_type(left.ty)} vs {print_type(right.ty)}")
    files, picked = _suite_files(Path(args.contexts), left.ty)
    contexts = [c for f in files for c in load_contexts(f)]
    result = ctx_equiv_suite(left.term, right.term, contexts, args.fuel, hole_ty=left.ty)
    report = suite_report(left.name, right.name, left.ty, args.fuel, result)
    text = f"agree {result.agreed} / unknown {result.unknown} / ill-typed {result.ill_typed}"
    _emit(args, report, text)
    if result.ill_typed:
        print(
            f"warning: {result.ill_typed} of {len(contexts)} contexts do not accept a hole of type {print_type(left.ty)}",
            file=sys.stderr,
        )
        if picked:
            return EXIT_CHECK_FAILED
    return EXIT_TIMEOUT if result.unknown else EXIT_OK


def cmd_sweep(args) -> int:
    from fpcProject.pipeline.sweep import run_sweep

    overrides = {"fuel": args.fuel, "depth": args.depth, "jobs": args.jobs}
    report = SweepReport(stages=run_sweep(overrides))
    lines = [f"{s.stage:<24} checked {s.checked:>3}  passed {s.passed:>3}  failed {s.failed:>3}  skipped {s.skipped:>3}" for s in report.stages]
    _emit(args, report, "\n".join(lines))
    return EXIT_CHECK_FAILED if report.failed else EXIT_OK


# ---------------------------------------------------------------- argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--fuel", type=int, help="evaluation budget (default: params.yaml `fuel`)")
    common.add_argument("--depth", type=int, help="observation depth (default: params.yaml `depth`)")

    parser = argparse.ArgumentParser(prog="fpc", description="FPC semantics toolchain")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("check", parents=[common], help="parse and type check a program")
    p.add_argument("file", type=Path)
    p.add_argument("--core", action="store_true", help="also print the elaborated tree")
    p.set_defaults(func=cmd_check)

    p = commands.add_parser("run", parents=[common], help="evaluate a program")
    p.add_argument("file", type=Path)
    p.add_argument("--trace", action="store_true", help="small-step evaluation with a trace")
    p.add_argument("--small", action="store_true", help="small-step evaluation without a trace")
    p.set_defaults(func=cmd_run)

    for name, func, text in (
        ("denote", cmd_denote, "observe the denotation of a ground program"),
        ("adequacy", cmd_adequacy, "compare operational and denotational step counts"),
        ("exec", cmd_exec, "run the denotation of a sum-typed program for --fuel steps"),
    ):
        p = commands.add_parser(name, parents=[common], help=text)
        p.add_argument("file", type=Path)
        p.set_defaults(func=func)

    p = commands.add_parser("bisim", parents=[common], help="weak bisimulation of two denotations")
    p.add_argument("left", type=Path)
    p.add_argument("right", type=Path)
    p.set_defaults(func=cmd_bisim)

    p = commands.add_parser("ctx-equiv", parents=[common], help="run a context suite on two programs")
    p.add_argument("left", type=Path)
    p.add_argument("right", type=Path)
    p.add_argument("--contexts", type=Path, default=Path("contexts"), help="a .ctx file or a directory of them")
    p.set_defaults(func=cmd_ctx_equiv)

    p = commands.add_parser("sweep", parents=[common], help="run every harness stage")
    p.add_argument("--jobs", type=int, help="parallel workers for corpus stages")
    p.set_defaults(func=cmd_sweep)

    return parser


def _resolve(args) -> None:
    """Fill unset numeric flags from params.yaml and validate them."""
    params = read_yaml_or_default(PARAMS_FILE_PATH, DEFAULT_PARAMS)
    if args.fuel is None and args.command != "sweep":
        args.fuel = params.get("fuel", DEFAULT_PARAMS["fuel"])
    if args.depth is None and args.command != "sweep":
        args.depth = params.get("depth", DEFAULT_PARAMS["depth"])
    for flag in ("fuel", "depth"):
        value = getattr(args, flag)
        if value is not None and value < 0:
            raise UsageError(f"--{flag} must be non-negative")
    if getattr(args, "jobs", None) is not None and args.jobs < 1:
        raise UsageError("--jobs must be at least 1")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        _resolve(args)
        try:
            return args.func(args)
        except RecursionError:
            raise NestingTooDeep(str(getattr(args, "file", ""))) from None
    except (FPCError, OSError) as e:
        logger.warning(f"{args.command}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
