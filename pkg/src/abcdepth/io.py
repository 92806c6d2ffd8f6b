"""CSV point files and JSON result documents.

Depths are always written as an exact ``numerator``/``denominator`` pair next
to their decimal value.  JSON output uses sorted keys and Python's shortest
round-trip float repr, so identical documents serialize to identical bytes.
"""

from __future__ import annotations

import csv
import io
import json
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from abcdepth.core import DataSet
from abcdepth.engine import DepthResult, LevelSet, MedianResult
from abcdepth.errors import CSVFormatError, InputError

FORMAT_VERSION = 1


@contextmanager
def _open(target, mode):
    if hasattr(target, "read" if "r" in mode else "write"):
        yield target
    else:
        with open(target, mode, newline="" if "r" in mode else None, encoding="utf-8") as fh:
            yield fh


def _is_number(cell):
    try:
        float(cell)
    except ValueError:
        return False
    return True


def read_points_csv(source):
    """Parse comma-separated points; an optional non-numeric first row is a header."""
    with _open(source, "r") as fh:
        text = fh.read()
    rows = []
    width = None
    reader = csv.reader(io.StringIO(text))
    for lineno, row in enumerate(reader, start=1):
        cells = [c.strip() for c in row]
        if not cells or all(c == "" for c in cells):
            continue
        if not rows and width is None and not all(_is_number(c) for c in cells):
            width = len(cells)  # header
            continue
        values = []
        for col, cell in enumerate(cells, start=1):
            try:
                values.append(float(cell))
            except ValueError:
                raise CSVFormatError(f"row {lineno}, column {col}: {cell!r} is not a number",
                                     row=lineno, column=col) from None
        if width is None:
            width = len(values)
        elif len(values) != width:
            raise CSVFormatError(f"row {lineno} has {len(values)} fields, expected {width}", row=lineno)
        rows.append(values)
    if not rows:
        raise InputError("no data rows in CSV input")
    return DataSet(np.array(rows, dtype=np.float64))


def _fmt(v):
    return repr(float(v))


def write_points_csv(points, target, header=None):
    pts = points.points if isinstance(points, DataSet) else np.atleast_2d(np.asarray(points, dtype=np.float64))
    with _open(target, "w") as fh:
        if header:
            fh.write(",".join(header) + "\n")
        for row in pts:
            fh.write(",".join(_fmt(v) for v in row) + "\n")


def write_augmented_csv(augmented, target):
    """Sample and artificial points with a trailing ``source`` column."""
    d = augmented.sample.d
    with _open(target, "w") as fh:
        fh.write(",".join([f"x{k + 1}" for k in range(d)] + ["source"]) + "\n")
        for row, art in zip(augmented.points, augmented.is_artificial):
            fh.write(",".join(_fmt(v) for v in row) + ("," + ("artificial" if art else "sample")) + "\n")


def write_levelsets_csv(levels, candidates, target):
    cand = np.asarray(candidates, dtype=np.float64)
    d = cand.shape[1]
    with _open(target, "w") as fh:
        fh.write(",".join(["depth_numerator", "depth_denominator", "ball_size", "index"]
                          + [f"x{k + 1}" for k in range(d)]) + "\n")
        for lv in levels:
            for i in lv.members:
                fh.write(",".join([str(lv.alpha_numerator), str(lv.alpha_denominator), str(lv.ball_size), str(i)]
                                  + [_fmt(v) for v in cand[i]]) + "\n")


# -- JSON documents ---------------------------------------------------------

def _depth_dict(num, den):
    return {"numerator": int(num), "denominator": int(den), "value": num / den}


def _fraction_dict(f):
    f = Fraction(f)
    return {"numerator": f.numerator, "denominator": f.denominator}


def _points_list(arr):
    return [[float(v) for v in row] for row in np.asarray(arr, dtype=np.float64)]


def _level_to_dict(lv, candidates=None):
    out = {
        "alpha": _fraction_dict(lv.alpha),
        "depth": _depth_dict(lv.alpha_numerator, lv.alpha_denominator),
        "ball_size": lv.ball_size,
        "members": list(lv.members),
    }
    if candidates is not None:
        out["points"] = _points_list(candidates[list(lv.members)]) if lv.members else []
    return out


def _level_from_dict(obj):
    return LevelSet(
        alpha=Fraction(obj["alpha"]["numerator"], obj["alpha"]["denominator"]),
        alpha_numerator=obj["depth"]["numerator"],
        alpha_denominator=obj["depth"]["denominator"],
        ball_size=obj["ball_size"],
        members=tuple(obj["members"]),
    )


def _array(rows, d):
    return np.array(rows, dtype=np.float64).reshape(-1, d)


def _encode_payload(payload):
    if isinstance(payload, MedianResult):
        d = payload.candidates.shape[1]
        return {
            "kind": "median",
            "d": d,
            "depth": _depth_dict(payload.depth_numerator, payload.n),
            "median_indices": list(payload.median_indices),
            "median_points": _points_list(payload.median_points),
            "iterations": payload.iterations,
            "n_artificial": payload.n_artificial,
            "levels": [_level_to_dict(lv) for lv in payload.levels],
            "candidates": _points_list(payload.candidates),
        }
    if isinstance(payload, DepthResult):
        return {"kind": "depth", **_depth_result_dict(payload)}
    if isinstance(payload, LevelSetList):
        return {
            "kind": "levelsets",
            "d": payload.candidates.shape[1],
            "levels": [_level_to_dict(lv, payload.candidates) for lv in payload.levels],
            "candidates": _points_list(payload.candidates),
        }
    if isinstance(payload, Contours):
        return {
            "kind": "contour",
            "contours": [{"depth": _depth_dict(k, n), "polygon": [list(v) for v in poly]}
                         for (k, n), poly in zip(payload.depths, payload.polygons)],
        }
    if isinstance(payload, dict):
        return {"kind": "report", "report": payload}
    raise TypeError(f"cannot serialize payload of type {type(payload).__name__}")


def _depth_result_dict(r):
    return {
        "point": list(r.point),
        "depth": _depth_dict(r.depth_numerator, r.depth_denominator),
        "exit_ball_size": r.exit_ball_size,
        "mode": r.mode,
        "index": r.index,
    }


def _decode_payload(obj):
    kind = obj["kind"]
    if kind == "median":
        d = obj["d"]
        return MedianResult(
            median_indices=tuple(obj["median_indices"]),
            median_points=_array(obj["median_points"], d),
            depth_numerator=obj["depth"]["numerator"],
            n=obj["depth"]["denominator"],
            levels=tuple(_level_from_dict(lv) for lv in obj["levels"]),
            iterations=obj["iterations"],
            candidates=_array(obj["candidates"], d),
            n_artificial=obj["n_artificial"],
        )
    if kind == "depth":
        return DepthResult(
            point=tuple(obj["point"]),
            depth_numerator=obj["depth"]["numerator"],
            depth_denominator=obj["depth"]["denominator"],
            exit_ball_size=obj["exit_ball_size"],
            mode=obj["mode"],
            index=obj["index"],
        )
    if kind == "levelsets":
        return LevelSetList(tuple(_level_from_dict(lv) for lv in obj["levels"]),
                            _array(obj["candidates"], obj["d"]))
    if kind == "contour":
        return Contours(
            tuple((c["depth"]["numerator"], c["depth"]["denominator"]) for c in obj["contours"]),
            tuple(tuple(tuple(v) for v in c["polygon"]) for c in obj["contours"]),
        )
    if kind == "report":
        return obj["report"]
    raise InputError(f"unknown payload kind {kind!r}")


@dataclass(frozen=True, eq=False)
class LevelSetList:
    levels: tuple
    candidates: np.ndarray

    def __eq__(self, other):
        if not isinstance(other, LevelSetList):
            return NotImplemented
        return self.levels == other.levels and np.array_equal(self.candidates, other.candidates)


@dataclass(frozen=True)
class Contours:
    """Hull polygons, one per level, keyed by the level's depth (numerator, n)."""

    depths: tuple
    polygons: tuple


@dataclass
class ResultDocument:
    payload: object
    metadata: dict = field(default_factory=dict)

    def to_dict(self):
        return {"format_version": FORMAT_VERSION, "metadata": self.metadata,
                "payload": _encode_payload(self.payload)}

    @classmethod
    def from_dict(cls, obj):
        return cls(payload=_decode_payload(obj["payload"]), metadata=obj.get("metadata", {}))


def dumps(doc):
    return json.dumps(doc.to_dict(), sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


def write_result_json(doc, target):
    text = dumps(doc)
    with _open(target, "w") as fh:
        fh.write(text)


def read_result_json(source):
    with _open(source, "r") as fh:
        return ResultDocument.from_dict(json.load(fh))
