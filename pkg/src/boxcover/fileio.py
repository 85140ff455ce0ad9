"""Instance files, random instance generation and JSON result documents."""

from __future__ import annotations

import hashlib
import json
import re
from pathlib import Path
from typing import Sequence

import numpy as np

from .model import (AxisBox, CoverageMode, Instance, Solution, matrix_weight, region_weight)

Triple = tuple[float, float, float]


def parse_instance_text(text: str) -> list[Triple]:
    """One ``x, y, w`` point per line, commas or whitespace; '#' lines are comments."""
    points = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks = [t for t in re.split(r"[,\s]+", line) if t]
        if len(toks) != 3:
            raise ValueError(f"line {lineno}: expected 3 fields, got {len(toks)}")
        try:
            points.append(tuple(float(t) for t in toks))
        except ValueError:
            raise ValueError(f"line {lineno}: non-numeric field in {line!r}") from None
    return points


def read_instance(path: str | Path) -> list[Triple]:
    return parse_instance_text(Path(path).read_text())


def _num(v: float) -> str:
    return str(int(v)) if float(v).is_integer() else repr(float(v))


def format_instance(points: Sequence[Sequence[float]]) -> str:
    lines = ["# x, y, w"]
    lines += [f"{_num(x)}, {_num(y)}, {_num(w)}" for x, y, w in points]
    return "\n".join(lines) + "\n"


def instance_digest(instance: Instance) -> str:
    return hashlib.sha256(format_instance(
        [(p.x, p.y, p.w) for p in instance.points]).encode()).hexdigest()


def parse_weight_dist(text: str):
    """``uniform-int:W`` or ``mixed:p,W``; returns a sampler ``(rng, n) -> weights``."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "uniform-int":
            W = int(arg)
            if W < 1:
                raise ValueError
            choices = np.array([v for v in range(-W, W + 1) if v != 0])
            return lambda rng, n: rng.choice(choices, size=n).astype(float)
        if kind == "mixed":
            p_str, W_str = arg.split(",")
            p, W = float(p_str), int(W_str)
            if not 0.0 <= p <= 1.0 or W < 1:
                raise ValueError

            def sample(rng, n):
                mag = rng.integers(1, W + 1, size=n)
                sign = np.where(rng.random(n) < p, 1, -1)
                return (mag * sign).astype(float)
            return sample
    except ValueError:
        pass
    raise ValueError(f"invalid weight distribution {text!r}")


def generate_points(n: int, seed: int, weight_dist: str = "uniform-int:9",
                    coord_range: float = 1000.0) -> list[Triple]:
    """Random points with pairwise distinct x and distinct y, deterministic per seed."""
    sampler = parse_weight_dist(weight_dist)
    rng = np.random.default_rng(seed)

    def coords():
        vals = np.round(rng.uniform(0.0, coord_range, size=n), 3)
        while len(np.unique(vals)) < n:
            _, first = np.unique(vals, return_index=True)
            dup = np.setdiff1d(np.arange(n), first)
            vals[dup] = np.round(rng.uniform(0.0, coord_range, size=len(dup)), 3)
        return vals

    xs, ys = coords(), coords()
    ws = sampler(rng, n)
    return [(float(x), float(y), float(w)) for x, y, w in zip(xs, ys, ws)]


def jitter_points(points: Sequence[Triple], eps: float, seed: int) -> list[Triple]:
    rng = np.random.default_rng(seed)
    out = []
    for x, y, w in points:
        u, v = rng.uniform(-1.0, 1.0, size=2)
        out.append((x + u * eps, y + v * eps, w))
    return out


def contained_points(instance: Instance, box: AxisBox) -> list[int]:
    return [i for i, p in enumerate(instance.points) if box.contains(p.x, p.y)]


def result_document(instance: Instance, solution: Solution, k: int,
                    seconds: float | None = None) -> dict:
    boxes = []
    for b in solution.boxes:
        inside = contained_points(instance, b)
        boxes.append({
            "x_lo": b.x_lo, "x_hi": b.x_hi, "y_lo": b.y_lo, "y_hi": b.y_hi,
            "empty": b.empty,
            "point_free": not inside,
            "points": inside,
        })
    return {
        "objective": solution.objective,
        "mode": solution.mode.value,
        "shape": solution.shape,
        "k": k,
        "case_id": solution.case_id,
        "matrix": [list(r) for r in solution.matrix],
        "line_gaps": list(solution.line_gaps),
        "block_boundaries": list(solution.block_boundaries),
        "boxes": boxes,
        "n": instance.n,
        "instance_digest": instance_digest(instance),
        "seconds": seconds,
    }


def dump_result(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def recompute_objective(instance: Instance, doc: dict) -> float:
    """Objective re-derived from the document's boxes, or its strips and blocks."""
    mode = CoverageMode(doc["mode"])
    if mode is CoverageMode.SINGLE_MATRIX:
        return matrix_weight(instance, doc["matrix"], doc["line_gaps"], doc["block_boundaries"])
    boxes = [AxisBox(b["x_lo"], b["x_hi"], b["y_lo"], b["y_hi"], bool(b.get("empty", False)))
             for b in doc["boxes"]]
    return region_weight(instance, boxes, mode)


def verify_document(instance: Instance, doc: dict) -> tuple[bool, str]:
    if doc.get("instance_digest") not in (None, instance_digest(instance)):
        return False, "instance digest does not match"
    got = recompute_objective(instance, doc)
    tol = 1e-9 * float(np.abs(instance.weights).sum()) if instance.n else 0.0
    if abs(got - float(doc["objective"])) > tol:
        return False, f"recomputed {got!r} but document says {doc['objective']!r}"
    return True, f"objective {got!r} confirmed"
