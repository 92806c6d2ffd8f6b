"""Accuracy, scaling and verification harnesses.

Timed cells run sequentially and are warmed up once before the timed
repetitions.  As with ``timeit``, garbage collection is paused inside each
timed call.  Everything except wall times is reproducible from the seed.
"""

from __future__ import annotations

import csv
import gc
import math
import time
from collections import Counter
from dataclasses import asdict, dataclass, field

import numpy as np

from abcdepth.augmentation import DEFAULT_ARTIFICIAL, DEFAULT_MARGIN
from abcdepth.core import DataSet, build_ball_system, build_distance_table
from abcdepth.engine import depth_of_sample_point, tukey_median
from abcdepth.augmentation import augment
from abcdepth.errors import InputError
from abcdepth.oracle import exact_depth_1d, exact_depth_2d
from abcdepth.stats import chi_square_cdf
from abcdepth.synth import GeneratorSpec, generate


@dataclass(frozen=True)
class BenchGrid:
    n_values: tuple
    d_values: tuple
    repetitions: int = 10
    seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "n_values", tuple(int(v) for v in self.n_values))
        object.__setattr__(self, "d_values", tuple(int(v) for v in self.d_values))
        if not self.n_values or not self.d_values:
            raise InputError("grid needs at least one n and one d value")
        if min(self.n_values) < 2:
            raise InputError("grid n values must be >= 2")
        if min(self.d_values) < 1:
            raise InputError("grid d values must be >= 1")
        if self.repetitions < 1:
            raise InputError("repetitions must be >= 1")

    def cells(self):
        return [(n, d) for n in self.n_values for d in self.d_values]

    def trial_seed(self, n, d, rep):
        return int(np.random.SeedSequence([self.seed, n, d, rep]).generate_state(1)[0])


def parse_grid(text, repetitions=10, seed=0):
    """Parse ``"n=500,1000;d=10,100;reps=10;seed=0"``."""
    fields = {}
    for part in filter(None, (p.strip() for p in text.split(";"))):
        key, sep, value = part.partition("=")
        if not sep:
            raise InputError(f"grid component {part!r} is not key=value")
        fields[key.strip().lower()] = value.strip()
    unknown = set(fields) - {"n", "d", "reps", "repetitions", "seed"}
    if unknown:
        raise InputError(f"unknown grid keys: {', '.join(sorted(unknown))}")
    try:
        ns = [int(v) for v in fields.get("n", "").split(",") if v]
        ds = [int(v) for v in fields.get("d", "").split(",") if v]
        reps = int(fields.get("reps", fields.get("repetitions", repetitions)))
        seed = int(fields.get("seed", seed))
    except ValueError as exc:
        raise InputError(f"bad grid spec {text!r}: {exc}") from None
    return BenchGrid(tuple(ns), tuple(ds), reps, seed)


def _timed(fn, timer):
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = timer()
        out = fn()
        return out, timer() - t0
    finally:
        if was_enabled:
            gc.enable()


def median_location(result):
    """A single location for the median set: the centroid of its points."""
    return result.median_points.mean(axis=0)


# -- accuracy -----------------------------------------------------------------

@dataclass
class AccuracyTrial:
    n: int
    d: int
    rep: int
    seed: int
    norm2: float
    p_value: float
    seconds: float
    depth_numerator: int
    median_size: int


@dataclass
class AccuracyReport:
    trials: list = field(default_factory=list)

    def cells(self):
        out = []
        keys = sorted({(t.n, t.d) for t in self.trials})
        for n, d in keys:
            ts = [t for t in self.trials if (t.n, t.d) == (n, d)]
            ps = [t.p_value for t in ts]
            secs = [t.seconds for t in ts]
            out.append({"n": n, "d": d, "repetitions": len(ts),
                        "mean_p_value": float(np.mean(ps)), "max_p_value": float(np.max(ps)),
                        "mean_seconds": float(np.mean(secs)), "max_seconds": float(np.max(secs))})
        return out

    def to_dict(self):
        return {"trials": [asdict(t) for t in self.trials], "cells": self.cells()}

    def write_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "d", "rep", "seed", "norm2", "p_value", "seconds", "depth_numerator", "median_size"])
        for t in self.trials:
            w.writerow([t.n, t.d, t.rep, t.seed, repr(t.norm2), repr(t.p_value), repr(t.seconds),
                        t.depth_numerator, t.median_size])


def run_accuracy_bench(grid, artificial=0, margin=DEFAULT_MARGIN, timer=time.perf_counter):
    """Median error on N(0, I) samples as ``P(chi2(d) <= ||m||^2)``."""
    report = AccuracyReport()
    for n, d in grid.cells():
        samples = [generate(GeneratorSpec("normal", n=n, d=d, seed=grid.trial_seed(n, d, r)))
                   for r in range(grid.repetitions)]
        tukey_median(samples[0], artificial, seed=0, margin=margin)  # warm-up
        for rep, sample in enumerate(samples):
            seed = grid.trial_seed(n, d, rep)
            res, elapsed = _timed(lambda: tukey_median(sample, artificial, seed=seed, margin=margin), timer)
            m = median_location(res)
            norm2 = float(np.dot(m, m))
            report.trials.append(AccuracyTrial(n, d, rep, seed, norm2, chi_square_cdf(norm2, d), elapsed,
                                               res.depth_numerator, len(res.median_indices)))
    return report


# -- scaling ------------------------------------------------------------------

@dataclass
class ScalingReport:
    rows: list = field(default_factory=list)
    d_fits: list = field(default_factory=list)
    n_ratios: list = field(default_factory=list)

    def mean_time(self, n, d):
        for r in self.rows:
            if r["n"] == n and r["d"] == d:
                return r["mean_seconds"]
        raise KeyError((n, d))

    def to_dict(self):
        return {"rows": self.rows, "d_fits": self.d_fits, "n_ratios": self.n_ratios}

    def write_csv(self, fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "d", "repetitions", "mean_seconds", "min_seconds", "max_seconds"])
        for r in self.rows:
            w.writerow([r["n"], r["d"], r["repetitions"], repr(r["mean_seconds"]),
                        repr(r["min_seconds"]), repr(r["max_seconds"])])


def _n2logn(n):
    return n * n * math.log(n)


def run_scaling_bench(grid, timer=time.perf_counter):
    """Mean median wall time per (n, d) cell plus growth-rate summaries.

    For each fixed n with several d values, time is fitted linearly in d and
    the observed ``time(d_max) / time(d_min)`` is reported beside the fitted
    line's ratio.  For each fixed d, consecutive n values give ``time`` ratios
    together with the ``n^2 log n`` model ratio.
    """
    report = ScalingReport()
    for n, d in grid.cells():
        samples = [generate(GeneratorSpec("normal", n=n, d=d, seed=grid.trial_seed(n, d, r)))
                   for r in range(grid.repetitions)]
        tukey_median(samples[0])  # warm-up
        times = []
        for sample in samples:
            times.append(_timed(lambda: tukey_median(sample), timer)[1])
        report.rows.append({"n": n, "d": d, "repetitions": len(times), "mean_seconds": float(np.mean(times)),
                            "min_seconds": float(np.min(times)), "max_seconds": float(np.max(times))})

    if len(grid.d_values) >= 2:
        ds = np.array(sorted(grid.d_values), dtype=float)
        for n in grid.n_values:
            ts = np.array([report.mean_time(n, int(d)) for d in ds])
            slope, intercept = np.polyfit(ds, ts, 1)
            lo, hi = intercept + slope * ds[0], intercept + slope * ds[-1]
            report.d_fits.append({
                "n": n, "d_min": int(ds[0]), "d_max": int(ds[-1]),
                "slope": float(slope), "intercept": float(intercept),
                "observed_ratio": float(ts[-1] / ts[0]),
                "linear_fit_ratio": float(hi / lo) if lo > 0 else float("inf"),
                "proportional_ratio": float(ds[-1] / ds[0]),
            })
    if len(grid.n_values) >= 2:
        ns = sorted(grid.n_values)
        for d in grid.d_values:
            for a, b in zip(ns, ns[1:]):
                report.n_ratios.append({
                    "d": d, "n_small": a, "n_large": b,
                    "ratio": report.mean_time(b, d) / report.mean_time(a, d),
                    "model_ratio": _n2logn(b) / _n2logn(a),
                })
    return report


# -- verification against exact depth ---------------------------------------

@dataclass
class VerifyInstance:
    seed: int
    exact: list
    plain: list
    augmented: list

    @property
    def match_plain(self):
        return float(np.mean(np.array(self.plain) == np.array(self.exact)))

    @property
    def match_augmented(self):
        return float(np.mean(np.array(self.augmented) == np.array(self.exact)))


@dataclass
class VerifyReport:
    n: int
    d: int
    artificial: int
    margin: float
    instances: list = field(default_factory=list)

    @property
    def mean_match_plain(self):
        return float(np.mean([i.match_plain for i in self.instances]))

    @property
    def mean_match_augmented(self):
        return float(np.mean([i.match_augmented for i in self.instances]))

    @property
    def fraction_augmented_not_worse(self):
        return float(np.mean([i.match_augmented >= i.match_plain for i in self.instances]))

    def error_histogram(self, which):
        """Counts of signed errors ``approx - exact`` (depth numerators)."""
        c = Counter()
        for inst in self.instances:
            approx = inst.plain if which == "plain" else inst.augmented
            c.update(a - e for a, e in zip(approx, inst.exact))
        return dict(sorted(c.items()))

    def to_dict(self):
        return {
            "n": self.n, "d": self.d, "artificial": self.artificial, "margin": self.margin,
            "instances": len(self.instances),
            "mean_match_plain": self.mean_match_plain,
            "mean_match_augmented": self.mean_match_augmented,
            "fraction_augmented_not_worse": self.fraction_augmented_not_worse,
            "error_histogram_plain": {str(k): v for k, v in self.error_histogram("plain").items()},
            "error_histogram_augmented": {str(k): v for k, v in self.error_histogram("augmented").items()},
            "per_instance": [{"seed": i.seed, "match_plain": i.match_plain, "match_augmented": i.match_augmented}
                             for i in self.instances],
        }


def _approx_depths(data, extra):
    system = build_ball_system(data, build_distance_table(data), extra)
    return [depth_of_sample_point(data, system, i).depth_numerator for i in range(data.n)]


def run_verify(instances=50, seed=0, d=2, n=25, artificial=DEFAULT_ARTIFICIAL, margin=DEFAULT_MARGIN):
    """Compare ball-counting depths of every sample point with exact depths."""
    if d not in (1, 2):
        raise InputError("exact comparison is available for d in {1, 2}")
    report = VerifyReport(n, d, artificial, margin)
    seeds = np.random.SeedSequence(seed).generate_state(instances)
    for s in seeds:
        s = int(s)
        data = generate(GeneratorSpec("normal", n=n, d=d, seed=s))
        if d == 1:
            exact = [exact_depth_1d(data.points[:, 0], x[0]) * n for x in data.points]
        else:
            exact = [exact_depth_2d(data.points, x) * n for x in data.points]
        exact = [int(e) for e in exact]
        plain = _approx_depths(data, None)
        extra = augment(data, artificial, seed=s, margin=margin).artificial if artificial else None
        aug = _approx_depths(data, extra)
        report.instances.append(VerifyInstance(s, exact, plain, aug))
    return report
