"""Brute-force grid verifier, independent of the exact geometry engine.

The body is rasterized on a padded square grid; an exact Euclidean distance
transform (two 1D passes of parabola lower envelopes over squared integer
offsets) gives each inside cell its distance to the nearest outside cell
center.  Offset areas are then superlevel-set cell counts, and the area
equation is re-solved by bisection on that step function.

This module deliberately shares no geometric predicates with the rest of
the package: it reads the constraint fields of the input spec directly,
performs its own containment arithmetic with numpy, and bounds the body
with interval boxes plus linear programs.  Only the error types are shared.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from numba import njit
from scipy.optimize import linprog

from .errors import InvalidBodyError, OracleFailureError

PAD_CELLS = 2


@njit(cache=True)
def _edt_sq_pass(f, d, v, z):
    """1D lower envelope of parabolas (squared distances), one row."""
    n = f.shape[0]
    k = 0
    v[0] = 0
    z[0] = -1e30
    z[1] = 1e30
    for q in range(1, n):
        s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * (q - v[k]))
        while s <= z[k]:
            k -= 1
            s = ((f[q] + q * q) - (f[v[k]] + v[k] * v[k])) / (2.0 * (q - v[k]))
        k += 1
        v[k] = q
        z[k] = s
        z[k + 1] = 1e30
    k = 0
    for q in range(n):
        while z[k + 1] < q:
            k += 1
        d[q] = (q - v[k]) * (q - v[k]) + f[v[k]]


@njit(cache=True)
def _edt_sq_2d(outside):
    """Exact squared Euclidean distance (in cell units) to the nearest
    outside cell center.  Deterministic: plain row-by-row sweeps, no
    cross-cell reductions."""
    ny, nx = outside.shape
    big = 1e18
    g = np.empty((ny, nx), dtype=np.float64)
    for j in range(nx):
        col = np.empty(ny, dtype=np.float64)
        for i in range(ny):
            col[i] = 0.0 if outside[i, j] else big
        d = np.empty(ny, dtype=np.float64)
        v = np.empty(ny + 1, dtype=np.int64)
        z = np.empty(ny + 1, dtype=np.float64)
        _edt_sq_pass(col, d, v, z)
        for i in range(ny):
            g[i, j] = d[i]
    out = np.empty((ny, nx), dtype=np.float64)
    for i in range(ny):
        d = np.empty(nx, dtype=np.float64)
        v = np.empty(nx + 1, dtype=np.int64)
        z = np.empty(nx + 1, dtype=np.float64)
        _edt_sq_pass(g[i, :], d, v, z)
        for j in range(nx):
            out[i, j] = d[j]
    return out


@dataclass
class RasterBody:
    n: int
    cell: float
    origin: tuple[float, float]       # lower-left corner of the padded grid
    inside: np.ndarray                # bool, (n+2*PAD)^2
    dist: np.ndarray                  # float64, 0 outside, > 0 inside
    _sorted: np.ndarray = field(default=None, repr=False)

    def sorted_inside_dist(self) -> np.ndarray:
        if self._sorted is None:
            self._sorted = np.sort(self.dist[self.inside])
        return self._sorted


def _bounding_box(spec) -> tuple[float, float, float, float]:
    """Axis-aligned box guaranteed to contain the body, from disk boxes
    intersected and tightened by linear programs over the halfplanes."""
    x0 = y0 = -math.inf
    x1 = y1 = math.inf
    for d in spec.disks:
        x0, x1 = max(x0, d.cx - d.r), min(x1, d.cx + d.r)
        y0, y1 = max(y0, d.cy - d.r), min(y1, d.cy + d.r)
    halfplanes = list(spec.halfplanes)
    if halfplanes:
        a_ub = np.array([[h.nx, h.ny] for h in halfplanes])
        b_ub = np.array([h.c for h in halfplanes])
        bounds = [(None if not math.isfinite(x0) else x0,
                   None if not math.isfinite(x1) else x1),
                  (None if not math.isfinite(y0) else y0,
                   None if not math.isfinite(y1) else y1)]
        box = []
        for c in ([1, 0], [-1, 0], [0, 1], [0, -1]):
            res = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=bounds,
                          method="highs")
            if res.status != 0:
                raise OracleFailureError(
                    f"bounding-box LP failed (status {res.status}): "
                    f"{res.message}")
            box.append(res.fun if c[0] + c[1] > 0 else -res.fun)
        # the LPs already honoured the disk box through their bounds
        x0, x1 = box[0], box[1]
        y0, y1 = box[2], box[3]
    if not all(map(math.isfinite, (x0, y0, x1, y1))) or x1 <= x0 or y1 <= y0:
        raise OracleFailureError("could not bound the body for rasterization")
    return x0, y0, x1, y1


def rasterize(spec, n: int) -> RasterBody:
    """Cell-center rasterization plus exact distance transform.

    ``n`` is the resolution across the body's (squared-up) bounding box; a
    ring of ``PAD_CELLS`` outside cells is added on every side so the
    distance transform has outside seeds in all directions.
    """
    if n < 64:
        raise InvalidBodyError(f"oracle grid must have n >= 64, got {n}")
    x0, y0, x1, y1 = _bounding_box(spec)
    size = max(x1 - x0, y1 - y0)
    cx, cy = 0.5 * (x0 + x1), 0.5 * (y0 + y1)
    cell = size / n
    total = n + 2 * PAD_CELLS
    ox = cx - 0.5 * size - PAD_CELLS * cell
    oy = cy - 0.5 * size - PAD_CELLS * cell

    xs = ox + (np.arange(total) + 0.5) * cell
    ys = oy + (np.arange(total) + 0.5) * cell
    gx = xs[None, :]
    gy = ys[:, None]
    inside = np.ones((total, total), dtype=bool)
    for h in spec.halfplanes:
        inside &= (h.nx * gx + h.ny * gy) <= h.c
    for d in spec.disks:
        inside &= (gx - d.cx) ** 2 + (gy - d.cy) ** 2 <= d.r * d.r

    sq = _edt_sq_2d(~inside)
    dist = cell * np.sqrt(sq)
    dist[~inside] = 0.0
    return RasterBody(n, cell, (ox, oy), inside, dist)


def oracle_offset_area(raster: RasterBody, t: float) -> float:
    """cell^2 times the number of cells farther than t from the outside."""
    if t < 0.0:
        raise InvalidBodyError(f"offset distance must be >= 0, got {t}")
    d = raster.sorted_inside_dist()
    count = d.size - np.searchsorted(d, t, side="right")
    return float(count) * raster.cell * raster.cell


def solve_raster(raster: RasterBody) -> tuple[float, float]:
    """Bisection for the area-equation root on an existing raster."""
    d = raster.sorted_inside_dist()
    if d.size == 0:
        raise OracleFailureError("no inside cells in the raster")
    tmax = float(d[-1])

    def g(t: float) -> float:
        return oracle_offset_area(raster, t) - math.pi * t * t

    if g(tmax) >= 0.0:
        raise OracleFailureError(
            f"raster artifact: area equation still nonnegative at the "
            f"deepest cell (t={tmax!r})")
    lo, hi = 0.0, tmax
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if g(mid) > 0.0:
            lo = mid
        else:
            hi = mid
    s = 0.5 * (lo + hi)
    return s, 1.0 / s


def oracle_cheeger(spec, n: int) -> tuple[float, float]:
    """Re-solve the area equation on a fresh raster; returns (s, h)."""
    return solve_raster(rasterize(spec, n))


def write_pgm(raster: RasterBody, path: str) -> None:
    """Binary PGM (P5, maxval 255) of the distance field, scaled so the
    deepest cell maps to 255; row 0 is the top of the image."""
    d = raster.dist
    peak = float(d.max())
    img = np.zeros(d.shape, dtype=np.uint8) if peak <= 0.0 else \
        np.round(d / peak * 255.0).astype(np.uint8)
    img = img[::-1, :]   # mathematical y-up -> image y-down
    with open(path, "wb") as fh:
        fh.write(f"P5 {img.shape[1]} {img.shape[0]} 255\n".encode("ascii"))
        fh.write(img.tobytes())
