"""Command-line front end.

Exit codes: 0 success, 1 input or format problem, 2 when the input
order has dimension greater than two (no upward confluent diagram
exists in that case), 3 when --verify finds a failed check.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import bench, oracle, render
from .diagram import Diagram, validate_diagram
from .poset import Poset, parse_edge_list
from .realizer import DimensionExceedsTwo, parse_realizer, poset_from_realizer, realizer_of
from .sp import parse_sp, sp_layout, sp_to_poset

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_DIMENSION = 2
EXIT_VERIFY = 3


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # keep exit codes ours
        raise _ArgumentError(message)


@dataclass(frozen=True)
class CliConfig:
    input_path: str = "-"
    input_format: str = "edges"
    emit: str = "svg"
    out: str = "-"
    bezier_offset: float = 0.5
    show_invisible: bool = False
    verify: bool = False
    bench_sizes: tuple[int, ...] | None = None
    seed: int = 0


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    sizes = None
    if args.bench is not None:
        try:
            sizes = tuple(int(tok) for tok in args.bench.split(",") if tok.strip())
        except ValueError:
            raise _ArgumentError(
                f"--bench expects comma-separated integers, got {args.bench!r}"
            ) from None
    return CliConfig(
        input_path=args.input,
        input_format=args.input_format,
        emit=args.emit,
        out=args.out,
        bezier_offset=args.bezier_offset,
        show_invisible=args.show_invisible,
        verify=args.verify,
        bench_sizes=sizes,
        seed=args.seed,
    )


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="confluent-hasse",
        description=(
            "Draw a partial order of dimension at most two as an upward "
            "confluent Hasse diagram with the fewest possible junctions."
        ),
    )
    parser.add_argument("input", nargs="?", default="-", help="input file, or '-' for stdin")
    parser.add_argument(
        "--input-format",
        choices=("edges", "realizer", "sp"),
        default="edges",
        help="edge list 'u v' lines, a two-line realizer, or a series-parallel expression",
    )
    parser.add_argument(
        "--emit",
        choices=("svg", "json", "csv-stats"),
        default="svg",
        help="output kind (default svg)",
    )
    parser.add_argument("--out", default="-", help="output file, or '-' for stdout")
    parser.add_argument(
        "--bezier-offset",
        type=float,
        default=0.5,
        metavar="DELTA",
        help="vertical control-point offset at junctions, in rotated grid units (0 < DELTA < 1)",
    )
    parser.add_argument(
        "--show-invisible",
        action="store_true",
        help="also draw the invisible bound points and their tracks",
    )
    parser.add_argument(
        "--verify",
        action="store_true",
        help="validate the diagram (and, within oracle limits, completion equivalence)",
    )
    parser.add_argument(
        "--bench",
        metavar="SIZES",
        help="comma-separated sizes: run the scaling benchmark instead of drawing",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized inputs")
    return parser


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_output(path: str, payload: str) -> None:
    if path == "-":
        sys.stdout.write(payload)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(payload)


def _pipeline(text: str, fmt: str) -> tuple[Diagram, Poset, dict[str, float]]:
    if fmt == "sp":
        tree = parse_sp(text)
        t0 = time.perf_counter()
        diagram = sp_layout(tree)
        ms = (time.perf_counter() - t0) * 1000.0
        times = {"phase1": ms, "phase2": 0.0, "phase3": 0.0, "total": ms}
        return diagram, sp_to_poset(tree), times
    if fmt == "realizer":
        r = parse_realizer(text)
        p = poset_from_realizer(r)
    else:
        p = parse_edge_list(text)
        r = realizer_of(p)
    diagram, times = bench.timed_pipeline(r)
    return diagram, p, times


def _run_verify(diagram: Diagram, p: Poset) -> bool:
    report = validate_diagram(diagram, p)
    sys.stderr.write(report.summary() + "\n")
    ok = report.ok
    try:
        matches = oracle.scene_matches_completion(diagram.scene, p)
        sys.stderr.write(f"{'PASS' if matches else 'FAIL'} completion\n")
        ok = ok and matches
    except oracle.TooLargeForOracle:
        sys.stderr.write("WARN completion check skipped: instance exceeds oracle size limit\n")
    return ok


def run(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        cfg = _config_from_args(parser.parse_args(argv))
    except _ArgumentError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT

    if cfg.bench_sizes is not None:
        _write_output(cfg.out, bench.scaling_report(list(cfg.bench_sizes), seed=cfg.seed))
        return EXIT_OK

    try:
        text = _read_input(cfg.input_path)
    except OSError as exc:
        sys.stderr.write(f"error: cannot read {cfg.input_path!r}: {exc}\n")
        return EXIT_INPUT

    try:
        diagram, p, times = _pipeline(text, cfg.input_format)
    except DimensionExceedsTwo:
        sys.stderr.write(
            "error: this order has dimension greater than two; an upward "
            "confluent diagram exists if and only if the dimension is at most two\n"
        )
        return EXIT_DIMENSION
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT

    if cfg.verify and not _run_verify(diagram, p):
        return EXIT_VERIFY

    if cfg.emit == "svg":
        try:
            opts = render.RenderOptions(
                bezier_offset=cfg.bezier_offset, show_invisible=cfg.show_invisible
            )
        except ValueError as exc:
            sys.stderr.write(f"error: {exc}\n")
            return EXIT_INPUT
        payload = render.to_svg(render.rotate45(diagram), opts)
    elif cfg.emit == "json":
        payload = render.to_json(diagram)
    else:
        payload = bench.CSV_HEADER + "\n" + (
            f"{diagram.scene.n},{diagram.junction_count()},{len(diagram.segments)},"
            f"{times['phase1']:.3f},{times['phase2']:.3f},{times['phase3']:.3f},{times['total']:.3f}\n"
        )
    _write_output(cfg.out, payload)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
