"""Command-line entry point; exit 0 when the verdict passes, 1 when it fails, 2 on input errors."""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path

from app import DATA_FORMAT_VERSION, __version__
from app.cli.service import HANDLERS
from app.errors import NoSolutionWithinBound, ToolkitError
from app.formats import DataRepository
from app.settings import load_settings

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


def _inputs(parser: argparse.ArgumentParser, game: bool = True) -> None:
    parser.add_argument("--example", help="Built-in input: square, cube, pyramid, pyramid-distinct, polygon-N or p8.")
    parser.add_argument("--polytope", help="Polytope file (default: the P8 file in the data directory).")
    parser.add_argument("--colouring", help="Colouring file.")
    if game:
        parser.add_argument("--state", help="State file.")
        parser.add_argument("--moves", help="Moves file.")


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data-dir", help="Directory holding the default data files (env DATA_DIR).")
    parser.add_argument("--out", help="Also write the JSON report to this path.")
    parser.add_argument("--json", action="store_true", help="Print the JSON report instead of the summary.")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes (env WORKER_CONCURRENCY).")
    parser.add_argument("--seed", type=int, default=None, help="Seed recorded in the report (env RANDOM_SEED).")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rakernels",
        description="Kernel finiteness and cusp characters for coloured right-angled polytopes.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} (data format {DATA_FORMAT_VERSION})")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen-p8", help="Write the P8 polytope file.")
    gen.add_argument("--out-dir", help="Target directory (default: the data directory).")
    gen.add_argument("--with-colouring", action="store_true", help="Also write the frame colouring.")
    gen.add_argument("--with-state", action="store_true", help="Also write the half-space state and discrete moves.")

    gen_colouring = commands.add_parser("gen-colouring", help="Write the P8 frame colouring, half-space state and moves.")
    gen_colouring.add_argument("--out-dir", help="Target directory (default: the data directory).")
    gen_colouring.add_argument(
        "--search-attempts",
        type=int,
        default=0,
        help="Replace the half-space state by the best of N random balanced states (seeded by --seed).",
    )
    _inputs(gen_colouring, game=False)

    validate = commands.add_parser("validate", help="Check polytope, colouring, state and moves.")
    _inputs(validate)

    game = commands.add_parser("game", help="Classify adjacent facet pairs.")
    _inputs(game)

    cubulate = commands.add_parser("cubulate", help="Build the dual cubulation and report counts.")
    _inputs(cubulate)
    cubulate.add_argument("--dim", type=int, default=None, help="Highest cube dimension to build (default: full).")
    cubulate.add_argument("--betti", action="store_true", help="Compute Betti numbers of the built complex.")
    cubulate.add_argument("--field", choices=("Q", "Z2"), default="Q")

    links = commands.add_parser("links", help="Certify ascending and descending links.")
    _inputs(links)
    links.add_argument("--k", type=int, default=3, help="Finiteness degree to certify.")
    links.add_argument("--all-links", action="store_true", help="List passing links in the report too.")

    cusps = commands.add_parser("cusps", help="Surjectivity conditions at ideal vertices.")
    _inputs(cusps, game=False)
    cusps.add_argument("--vertex", type=int, action="append", help="Ideal vertex id (repeatable; default all).")
    cusps.add_argument("--iota", action="store_true", help="Evaluate the case cocycles on the cusp loops.")

    b1 = commands.add_parser("b1", help="First Betti number from colour-selected nerve subgraphs.")
    _inputs(b1, game=False)
    b1.add_argument("--expect", type=int, default=None, help="Fail unless the value matches.")

    cover = commands.add_parser("cover", help="Cyclic covers from the orientation cocycle.")
    _inputs(cover)
    cover.add_argument("--ell", type=int, nargs="+", required=True, help="Cover degrees.")
    cover.add_argument("--field", choices=("Q", "Z2"), default="Q")

    perturb = commands.add_parser("perturb", help="Perturb a character until its cusp kernels avoid short vectors.")
    _inputs(perturb)
    perturb.add_argument("--target", type=Fraction, nargs="+", required=True, help="Target systole bounds.")
    perturb.add_argument("--vertex", type=int, action="append", help="Ideal vertex id (repeatable; default all).")
    perturb.add_argument("--character", help="Base character file (default: the orientation cocycle).")
    perturb.add_argument("--aux", action="append", help="Auxiliary character file (repeatable; default: case cocycles).")
    perturb.add_argument("--gram", help="Gram file overriding the default cusp metrics.")
    perturb.add_argument("--emit-character", help="Write the perturbed character to this path.")

    census = commands.add_parser("census", help="Vertex types and cusp counts.")
    _inputs(census, game=False)

    chi = commands.add_parser("chi", help="Euler characteristic from the nerve.")
    _inputs(chi, game=False)

    for sub in commands.choices.values():
        _common(sub)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    settings = load_settings()
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, settings.log_level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        settings.validate()
        report = HANDLERS[args.command](args, settings)
    except NoSolutionWithinBound as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_FAIL
    except (ToolkitError, ValueError, RuntimeError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT
    except Exception:
        logger.exception("%s failed", args.command)
        return EXIT_INPUT

    if args.out:
        DataRepository(Path(args.out).parent).write_json(Path(args.out), report.model_dump(mode="json"))
    print(report.to_json() if args.json else report.summary())
    return EXIT_PASS if report.passed else EXIT_FAIL


__all__ = ["EXIT_FAIL", "EXIT_INPUT", "EXIT_PASS", "build_parser", "main"]
