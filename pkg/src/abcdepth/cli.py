"""``abcdepth`` command line.

Exit status: 0 on success, 1 when the input data or the computation fails,
2 on usage errors (bad flags, missing input).
"""

from __future__ import annotations

import argparse
import io
import sys
import time

import numpy as np

from abcdepth import __version__, kernels
from abcdepth.augmentation import DEFAULT_ARTIFICIAL, DEFAULT_MARGIN, PRNG_NAME, augment
from abcdepth.bench import parse_grid, run_accuracy_bench, run_scaling_bench, run_verify
from abcdepth.core import build_ball_system, build_distance_table
from abcdepth.engine import (
    compute_level_sets,
    contour_2d,
    depth_of_out_of_sample_point,
    depth_of_sample_point,
    tukey_median,
)
from abcdepth.errors import CostGuardError, InputError
from abcdepth.io import (
    Contours,
    LevelSetList,
    ResultDocument,
    dumps,
    read_points_csv,
    write_augmented_csv,
    write_levelsets_csv,
    write_points_csv,
)
from abcdepth.synth import KINDS, GeneratorSpec, generate


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_input(p):
    p.add_argument("--input", metavar="PATH", help="CSV points; '-' or omitted reads a piped stdin")


def _add_output(p, formats=("json",)):
    p.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    p.add_argument("--format", choices=formats, default=formats[0])


def _add_augment(p, default_artificial=0):
    p.add_argument("--artificial", type=int, default=default_artificial, metavar="K")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--margin", type=float, default=DEFAULT_MARGIN, metavar="F",
                   help=f"bounding-box expansion for artificial points (default {DEFAULT_MARGIN})")


def build_parser():
    parser = _Parser(prog="abcdepth", description="Approximate Tukey depth and median by ball intersections.")
    parser.add_argument("--version", action="version", version=f"abcdepth {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("median", help="deepest level set")
    _add_input(p)
    _add_output(p, ("json", "csv"))
    _add_augment(p)

    p = sub.add_parser("depth", help="depth of one point")
    _add_input(p)
    _add_output(p)
    _add_augment(p)
    where = p.add_mutually_exclusive_group(required=True)
    where.add_argument("--point", metavar="C1,C2,...")
    where.add_argument("--index", type=int, metavar="I", help="0-based sample row")

    p = sub.add_parser("levelsets", help="all level sets")
    _add_input(p)
    _add_output(p, ("json", "csv"))
    _add_augment(p)

    p = sub.add_parser("contour", help="convex hull of each 2-D level set")
    _add_input(p)
    _add_output(p)
    _add_augment(p)

    p = sub.add_parser("generate", help="write a synthetic sample as CSV")
    p.add_argument("--dist", choices=KINDS, default="normal")
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--d", type=int, default=2)
    _add_output(p, ("csv",))
    _add_augment(p)

    p = sub.add_parser("bench", help="accuracy or scaling benchmark")
    p.add_argument("--grid", required=True, metavar="SPEC", help='e.g. "n=1000;d=10,100;reps=10;seed=0"')
    p.add_argument("--mode", choices=("accuracy", "scaling"), default="accuracy")
    _add_output(p, ("json", "csv"))
    _add_augment(p)

    p = sub.add_parser("verify", help="compare with exact depth on small random instances")
    p.add_argument("--n", type=int, default=25)
    p.add_argument("--d", type=int, default=2, choices=(1, 2))
    p.add_argument("--instances", type=int, default=50)
    _add_output(p)
    _add_augment(p, default_artificial=DEFAULT_ARTIFICIAL)
    return parser


def _read_input(args, stdin):
    if args.input and args.input != "-":
        try:
            return read_points_csv(args.input)
        except FileNotFoundError:
            raise UsageError(f"input file not found: {args.input}") from None
    if args.input is None and stdin.isatty():
        raise UsageError("no --input given and stdin is a terminal")
    text = stdin.read()
    if args.input is None and not text.strip():
        raise UsageError("no --input given and stdin is empty")
    return read_points_csv(io.StringIO(text))


def _parse_point(text, d):
    try:
        coords = [float(c) for c in text.split(",")]
    except ValueError:
        raise UsageError(f"--point must be comma-separated numbers, got {text!r}") from None
    if len(coords) != d:
        raise InputError(f"--point has {len(coords)} coordinates, data has {d}")
    return np.array(coords)


def _metadata(args, data=None, seconds=None, **extra):
    meta = {"version": __version__, "backend": kernels.BACKEND, "prng": PRNG_NAME}
    for key in ("seed", "artificial", "margin"):
        if hasattr(args, key):
            meta[key] = getattr(args, key)
    if data is not None:
        meta["n"], meta["d"] = data.n, data.d
    if seconds is not None:
        meta["timing"] = {"seconds": seconds}
    meta.update(extra)
    return meta


def _system(data, args):
    extra = None
    if args.artificial:
        extra = augment(data, args.artificial, seed=args.seed, margin=args.margin).artificial
    return build_ball_system(data, build_distance_table(data), extra)


def _run(args, stdin):
    """Return the text to emit."""
    cmd = args.command
    if cmd == "generate":
        spec = GeneratorSpec(args.dist, n=args.n, d=args.d, seed=args.seed)
        data = generate(spec)
        out = io.StringIO()
        if args.artificial:
            write_augmented_csv(augment(data, args.artificial, seed=args.seed, margin=args.margin), out)
        else:
            write_points_csv(data, out)
        return out.getvalue()

    if cmd == "bench":
        grid = parse_grid(args.grid, seed=args.seed)
        t0 = time.perf_counter()
        if args.mode == "accuracy":
            report = run_accuracy_bench(grid, artificial=args.artificial, margin=args.margin)
        else:
            report = run_scaling_bench(grid)
        seconds = time.perf_counter() - t0
        if args.format == "csv":
            out = io.StringIO()
            report.write_csv(out)
            return out.getvalue()
        return dumps(ResultDocument(report.to_dict(), _metadata(args, seconds=seconds, mode=args.mode,
                                                                  grid=args.grid)))

    if cmd == "verify":
        if args.n < 2 or args.instances < 1:
            raise UsageError("verify needs --n >= 2 and --instances >= 1")
        t0 = time.perf_counter()
        report = run_verify(args.instances, seed=args.seed, d=args.d, n=args.n,
                            artificial=args.artificial, margin=args.margin)
        meta = _metadata(args, seconds=time.perf_counter() - t0, n=args.n, d=args.d)
        return dumps(ResultDocument(report.to_dict(), meta))

    data = _read_input(args, stdin)
    t0 = time.perf_counter()
    if cmd == "median":
        result = tukey_median(data, args.artificial, seed=args.seed, margin=args.margin)
        seconds = time.perf_counter() - t0
        if args.format == "csv":
            out = io.StringIO()
            write_points_csv(result.median_points, out, header=[f"x{k + 1}" for k in range(data.d)])
            return out.getvalue()
        return dumps(ResultDocument(result, _metadata(args, data, seconds)))

    system = _system(data, args)
    if cmd == "depth":
        if args.index is not None:
            result = depth_of_sample_point(data, system, args.index)
        else:
            result = depth_of_out_of_sample_point(data, system, _parse_point(args.point, data.d))
        return dumps(ResultDocument(result, _metadata(args, data, time.perf_counter() - t0)))

    levels = compute_level_sets(data, system)
    candidates = system.center_points
    if cmd == "levelsets":
        if args.format == "csv":
            out = io.StringIO()
            write_levelsets_csv(levels, candidates, out)
            return out.getvalue()
        return dumps(ResultDocument(LevelSetList(tuple(levels), candidates),
                                    _metadata(args, data, time.perf_counter() - t0)))

    polygons = tuple(tuple(contour_2d(lv, candidates)) for lv in levels)
    payload = Contours(tuple((lv.alpha_numerator, lv.alpha_denominator) for lv in levels), polygons)
    return dumps(ResultDocument(payload, _metadata(args, data, time.perf_counter() - t0)))


def main(argv=None, stdin=None, stdout=None, stderr=None):
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = _run(args, stdin)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except (InputError, CostGuardError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
