"""Argument parser for the flowerdom command line."""

from __future__ import annotations

import argparse
import re

from flower import FORMATS

_RANGE_PATTERN = re.compile(r"\s*(\d+)\s*\.\.\s*(\d+)\s*")


def parse_range(text: str) -> range:
    """Parse an inclusive `a..b` range."""
    match = _RANGE_PATTERN.fullmatch(text)
    if match is None:
        raise argparse.ArgumentTypeError(f"expected a range like 3..8, got {text!r}")
    start, stop = int(match.group(1)), int(match.group(2))
    if start > stop:
        raise argparse.ArgumentTypeError(f"range {text!r} is empty")
    return range(start, stop + 1)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a number, got {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return value


def _add_instance(parser: argparse.ArgumentParser, *, with_k: bool) -> None:
    parser.add_argument("--n", type=int, required=True, help="number of petals (n >= 3)")
    parser.add_argument("--m", type=int, required=True, help="petal cycle length (m >= 3)")
    if with_k:
        parser.add_argument("--k", type=_positive_int, default=1, help="domination distance (default 1)")


def _add_solver_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--timeout", type=_positive_float, help="solve time limit in seconds")
    parser.add_argument("--threads", type=_positive_int, help="solver worker processes")
    parser.add_argument("--max-vertices", type=_positive_int, help="largest instance to solve")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flowerdom",
        description="Paired and distance paired domination of flower graphs.",
    )
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="print the flower graph f_{n x m}")
    _add_instance(gen, with_k=False)
    gen.add_argument("--format", choices=FORMATS, default="edgelist")

    formula = commands.add_parser("formula", help="print the closed-form minimum")
    _add_instance(formula, with_k=True)
    formula.add_argument("--json", action="store_true", help="print the formula case as JSON")

    construct = commands.add_parser("construct", help="print a verified paired set of formula size")
    _add_instance(construct, with_k=True)

    verify = commands.add_parser("verify", help="check a PairedSet JSON file")
    _add_instance(verify, with_k=True)
    verify.add_argument("set_file", help="path to a PairedSet JSON document")

    solve = commands.add_parser("solve", help="exact minimum by branch and bound")
    _add_instance(solve, with_k=True)
    _add_solver_limits(solve)
    solve.add_argument(
        "--report",
        action="store_true",
        help="add per-petal counts and the plain domination number",
    )

    sweep = commands.add_parser("sweep", help="compare closed forms, constructions and the solver")
    sweep.add_argument("--n-range", type=parse_range, required=True, metavar="A..B")
    sweep.add_argument("--m-range", type=parse_range, required=True, metavar="A..B")
    sweep.add_argument("--k", type=_positive_int, default=1)
    sweep.add_argument("--out", help="write the CSV here instead of stdout")
    sweep.add_argument("--json", action="store_true", help="print rows and summary as JSON")
    sweep.add_argument(
        "--allow-ledgered",
        action="store_true",
        help="accept solver values that match a ledgered alternative reading",
    )
    _add_solver_limits(sweep)
    return parser
