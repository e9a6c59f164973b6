"""Command handlers: each writes data to stdout and returns an exit code."""

from __future__ import annotations

import argparse
import json
import logging
import multiprocessing
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, Mapping, TextIO

from config import AppConfigurationError, SolverSettings, load_solver_settings
from constructions import (
    ConstructionError,
    RepairFailedError,
    UnsupportedDistanceError,
    build_construction,
    cite,
    formula_case,
)
from contracts import CommandError, ExitCode
from domination import PairedSet, PairedSetFormatError, is_k_paired_dominating
from flower import FlowerError, flower, render
from solver import (
    BudgetError,
    InstanceTooLargeError,
    SolveBudget,
    lower_bound_report,
    min_distance_domination,
    min_paired_domination,
)

from .sweep import SweepSummary, run_sweep, write_csv


@dataclass(frozen=True, slots=True)
class CommandContext:
    stdout: TextIO
    environ: Mapping[str, str]
    logger: logging.Logger
    log_queue: multiprocessing.Queue[object] | None = None


def _write_json(stream: TextIO, payload: Any) -> None:
    stream.write(json.dumps(payload, indent=2) + "\n")


def _solver_limits(
    args: argparse.Namespace, settings: SolverSettings
) -> tuple[SolveBudget, int]:
    budget = SolveBudget(
        max_vertices=args.max_vertices or settings.max_vertices,
        time_limit=args.timeout or settings.time_limit_seconds,
    )
    return budget, args.threads or settings.threads


def cmd_gen(args: argparse.Namespace, context: CommandContext) -> ExitCode:
    context.stdout.write(render(flower(args.n, args.m), args.format))
    return ExitCode.OK


def cmd_formula(args: argparse.Namespace, context: CommandContext) -> ExitCode:
    case = formula_case(args.n, args.m, args.k)
    if args.json:
        _write_json(context.stdout, {"n": args.n, "m": args.m, **case.to_payload()})
    else:
        context.stdout.write(f"{case.value}\n")
    return ExitCode.OK


def cmd_construct(args: argparse.Namespace, context: CommandContext) -> ExitCode:
    try:
        result = build_construction(args.n, args.m, args.k, logger=context.logger)
    except RepairFailedError:
        context.logger.error("%s", cite(("canonical-layout",)))
        raise
    _write_json(context.stdout, result.to_payload())
    return ExitCode.OK


def cmd_verify(args: argparse.Namespace, context: CommandContext) -> ExitCode:
    g = flower(args.n, args.m)
    try:
        text = Path(args.set_file).read_text(encoding="utf-8")
    except OSError as error:
        raise CommandError(f"cannot read {args.set_file}: {error}", exit_code=ExitCode.IO_ERROR) from error

    diagnostic = is_k_paired_dominating(g, PairedSet.from_json(text), args.k)
    _write_json(context.stdout, diagnostic.to_payload())
    return ExitCode.OK if diagnostic.valid else ExitCode.FAILURE


def _incumbent(n: int, m: int, k: int, logger: logging.Logger) -> PairedSet | None:
    try:
        return build_construction(n, m, k, logger=logger).paired_set
    except ConstructionError as error:
        logger.debug("No construction incumbent for f_%dx%d k=%d: %s", n, m, k, error)
        return None


def cmd_solve(args: argparse.Namespace, context: CommandContext) -> ExitCode:
    settings = load_solver_settings(environ=context.environ)
    budget, threads = _solver_limits(args, settings)
    g = flower(args.n, args.m)
    result = min_paired_domination(
        g,
        args.k,
        budget,
        threads=threads,
        incumbent=_incumbent(args.n, args.m, args.k, context.logger),
        log_queue=context.log_queue,
        logger=context.logger,
    )

    payload = result.to_payload()
    if args.report:
        if result.proven:
            payload["report"] = lower_bound_report(g, result, args.k).to_payload()
        payload["plain"] = min_distance_domination(
            g, args.k, budget, logger=context.logger
        ).to_payload()
    _write_json(context.stdout, payload)
    if not result.proven:
        context.logger.warning("Search stopped before proving the optimum; see lower_bound.")
    return ExitCode.OK


def cmd_sweep(args: argparse.Namespace, context: CommandContext) -> ExitCode:
    settings = load_solver_settings(environ=context.environ)
    budget, threads = _solver_limits(args, settings)
    rows = run_sweep(
        args.n_range,
        args.m_range,
        args.k,
        budget=budget,
        threads=threads,
        allow_ledgered=args.allow_ledgered,
        log_queue=context.log_queue,
        logger=context.logger,
    )
    summary = SweepSummary.from_rows(rows)

    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8", newline="") as stream:
                write_csv(rows, stream)
        except OSError as error:
            raise CommandError(f"cannot write {args.out}: {error}", exit_code=ExitCode.IO_ERROR) from error
    elif not args.json:
        write_csv(rows, context.stdout)

    if args.json:
        _write_json(
            context.stdout,
            {"summary": summary.to_payload(), "rows": [row.to_payload() for row in rows]},
        )
    context.logger.info("Sweep k=%d: %s", args.k, summary.describe())
    return ExitCode.OK if summary.ok else ExitCode.FAILURE


COMMANDS: dict[str, Callable[[argparse.Namespace, CommandContext], ExitCode]] = {
    "gen": cmd_gen,
    "formula": cmd_formula,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "solve": cmd_solve,
    "sweep": cmd_sweep,
}

_USAGE_ERRORS = (
    AppConfigurationError,
    BudgetError,
    FlowerError,
    InstanceTooLargeError,
    PairedSetFormatError,
    UnsupportedDistanceError,
)


def exit_code_for(error: Exception) -> ExitCode:
    if isinstance(error, CommandError):
        return error.exit_code
    if isinstance(error, _USAGE_ERRORS):
        return ExitCode.USAGE
    if isinstance(error, RepairFailedError):
        return ExitCode.REPAIR_FAILED
    if isinstance(error, OSError):
        return ExitCode.IO_ERROR
    return ExitCode.FAILURE


def execute(
    args: argparse.Namespace,
    *,
    stdout: TextIO,
    environ: Mapping[str, str] | None = None,
    log_queue: multiprocessing.Queue[object] | None = None,
    logger: logging.Logger | None = None,
) -> ExitCode:
    """Run the parsed command; expected failures become exit codes, the rest propagate."""
    log = logger or logging.getLogger("cli")
    context = CommandContext(
        stdout=stdout,
        environ=os.environ if environ is None else environ,
        logger=log,
        log_queue=log_queue,
    )
    try:
        return COMMANDS[args.command](args, context)
    except (CommandError, RepairFailedError, OSError, *_USAGE_ERRORS) as error:
        log.error("%s", error)
        return exit_code_for(error)
