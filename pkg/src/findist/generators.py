"""Seeded point-set generators for the experiment harness.

Every generator is a pure function of (field, kind, params, seed).  Sampling
runs on numpy's PCG64 behind a SeedSequence, so the same inputs always yield
the same set, independent of platform and process.
"""

from typing import Mapping

import numpy as np

from .field import FieldSpec
from .geometry import Circle, Line, Point, PointSet, all_points, origin

GENERATOR_KINDS = (
    "full-plane",
    "random",
    "grid",
    "on-line",
    "on-circle",
    "subfield",
    "isotropic-line",
)


class UnsupportedGeneratorError(ValueError):
    """Raised when a generator kind cannot exist over the requested field."""


def _rng(seed: int) -> np.random.Generator:
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed {seed} outside the 64-bit range")
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def _check_params(kind: str, params: Mapping, required: set, optional: set) -> None:
    given = set(params)
    unknown = given - required - optional
    if unknown:
        raise ValueError(f"{kind}: unknown parameters {sorted(unknown)}")
    missing = required - given
    if missing:
        raise ValueError(f"{kind}: missing parameters {sorted(missing)}")


def _size(params: Mapping, kind: str, available: int) -> int:
    size = params["size"]
    if not isinstance(size, int) or size < 1:
        raise ValueError(f"{kind}: size must be a positive integer, got {size!r}")
    if size > available:
        raise ValueError(f"{kind}: size {size} exceeds the {available} available points")
    return size


def _sample(rng: np.random.Generator, pool: list, size: int) -> list:
    if size == len(pool):
        return pool
    picks = rng.choice(len(pool), size=size, replace=False)
    return [pool[int(i)] for i in picks]


def _full_plane(spec: FieldSpec, params: Mapping, rng) -> list:
    _check_params("full-plane", params, set(), set())
    return list(all_points(spec))


def _random(spec: FieldSpec, params: Mapping, rng) -> list:
    _check_params("random", params, {"size"}, set())
    pool = list(all_points(spec))
    return _sample(rng, pool, _size(params, "random", len(pool)))


def _grid(spec: FieldSpec, params: Mapping, rng) -> list:
    _check_params("grid", params, {"rows", "cols"}, set())
    rows, cols = params["rows"], params["cols"]
    for name, value in (("rows", rows), ("cols", cols)):
        if not isinstance(value, int) or not 1 <= value <= spec.q:
            raise ValueError(f"grid: {name} must lie in 1..{spec.q}, got {value!r}")
    return [
        Point(spec.from_index(i), spec.from_index(j))
        for i in range(rows)
        for j in range(cols)
    ]


def _line_points(spec: FieldSpec, line: Line) -> list:
    return [p for p in all_points(spec) if line.contains(p)]


def _on_line(spec: FieldSpec, params: Mapping, rng) -> list:
    _check_params("on-line", params, {"size"}, {"line"})
    if "line" in params:
        n1, n2, c = (spec.from_index(i) for i in params["line"])
        line = Line(n1, n2, c)
    else:
        # default carrier is the x-axis
        line = Line(spec.zero(), spec.one(), spec.zero())
    pool = _line_points(spec, line)
    return _sample(rng, pool, _size(params, "on-line", len(pool)))


def _on_circle(spec: FieldSpec, params: Mapping, rng) -> list:
    _check_params("on-circle", params, {"size"}, {"center", "radius_sq"})
    if "center" in params:
        cx, cy = params["center"]
        center = Point(spec.from_index(cx), spec.from_index(cy))
    else:
        center = origin(spec)
    radius_sq = spec.from_index(params.get("radius_sq", 1))
    if not radius_sq:
        raise UnsupportedGeneratorError("on-circle: radius_sq 0 is the degenerate cone")
    circle = Circle(center, radius_sq)
    pool = [p for p in all_points(spec) if circle.contains(p)]
    return _sample(rng, pool, _size(params, "on-circle", len(pool)))


def _subfield(spec: FieldSpec, params: Mapping, rng) -> list:
    _check_params("subfield", params, set(), {"size"})
    if spec.r != 2:
        raise UnsupportedGeneratorError(
            f"subfield: needs a quadratic extension, got degree {spec.r}"
        )
    base = [spec.element(c) for c in range(spec.p)]
    pool = [Point(x, y) for x in base for y in base]
    if "size" not in params:
        return pool
    return _sample(rng, pool, _size(params, "subfield", len(pool)))


def _isotropic_line(spec: FieldSpec, params: Mapping, rng) -> list:
    _check_params("isotropic-line", params, set(), {"size"})
    if spec.chi_minus_one() != 1:
        raise UnsupportedGeneratorError(
            f"isotropic-line: -1 is a non-square over q={spec.q}"
        )
    slope = (-spec.one()).sqrt()[0]
    pool = [Point(t, slope * t) for t in spec.elements()]
    if "size" not in params:
        return pool
    return _sample(rng, pool, _size(params, "isotropic-line", len(pool)))


_DISPATCH = {
    "full-plane": _full_plane,
    "random": _random,
    "grid": _grid,
    "on-line": _on_line,
    "on-circle": _on_circle,
    "subfield": _subfield,
    "isotropic-line": _isotropic_line,
}


def generate(spec: FieldSpec, kind: str, params: Mapping, seed: int) -> PointSet:
    """Build the point set named by (kind, params) with a seeded PRNG."""
    if kind not in _DISPATCH:
        raise ValueError(f"unknown generator kind {kind!r}; choose from {GENERATOR_KINDS}")
    rng = _rng(seed)
    return PointSet(spec, _DISPATCH[kind](spec, params, rng))
