"""Time the compiled kernels against the numpy fallback and check they agree.

    python3 benchmarks/bench_kernels.py [--n 1000] [--d 50] [--reps 5]
"""

import argparse
import time

import numpy as np

from abcdepth import kernels
from abcdepth.core import TriangularDistanceTable
from abcdepth.synth import GeneratorSpec, generate


def _best_of(fn, reps):
    best = float("inf")
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run(n, d, reps):
    X = np.ascontiguousarray(generate(GeneratorSpec("normal", n=n, d=d, seed=0)).points)
    square = TriangularDistanceTable(n, kernels.get_backend("python").condensed_distances(X)).to_square()
    rows = np.sort(square, axis=1)
    query = np.ascontiguousarray(square[:, 0])
    cases = {
        "condensed_distances": lambda k: k.condensed_distances(X),
        "cross_distances": lambda k: k.cross_distances(X[: n // 4], X),
        "entry_thresholds": lambda k: k.entry_thresholds(square, rows),
        "depth_scan": lambda k: k.depth_scan(query, rows),
    }
    names = sorted(kernels.BACKENDS)
    print(f"n={n} d={d} best of {reps}; backends: {', '.join(names)}")
    print(f"{'kernel':22s}" + "".join(f"{b:>12s}" for b in names) + f"{'speedup':>10s}  agree")
    for label, fn in cases.items():
        times, outs = {}, {}
        for b in names:
            times[b], outs[b] = _best_of(lambda: fn(kernels.BACKENDS[b]), reps)
        ref = outs["python"]
        agree = all(np.array_equal(np.asarray(o), np.asarray(ref)) for o in outs.values())
        speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
        print(f"{label:22s}" + "".join(f"{times[b]:12.5f}" for b in names) + f"{speed:10.1f}  {agree}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--d", type=int, default=50)
    ap.add_argument("--reps", type=int, default=5)
    a = ap.parse_args()
    run(a.n, a.d, a.reps)


if __name__ == "__main__":
    main()
