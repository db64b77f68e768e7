"""Shared helpers: the symmetric body catalog and raster-based estimators
used as independent cross-checks."""

from __future__ import annotations

import math

import numpy as np

import cheeger2d as c2
from cheeger2d.oracle import oracle_offset_area, rasterize


def symmetric_catalog():
    """(label, k, chain, spec) for every body/k pair under test:
    regular polygons n=3..12 (k=n), Reuleaux k in {3,5,7}, disk-capped
    polygons k in {3,5}, the cut-corner hexagon (k=3), the 2x1 rectangle
    (k=2) and the unit disk for k=2..8."""
    bodies = []
    for n in range(3, 13):
        chain, spec = c2.make_catalog("regular_polygon",
                                      {"n": n, "circumradius": 1.0})
        bodies.append((f"regular_polygon_{n}", n, chain, spec))
    for k in (3, 5, 7):
        chain, spec = c2.make_catalog("reuleaux_polygon",
                                      {"k": k, "width": 1.0})
        bodies.append((f"reuleaux_{k}", k, chain, spec))
    for k in (3, 5):
        chain, spec = c2.make_catalog("disk_cap_regular_polygon", {"k": k})
        bodies.append((f"disk_cap_{k}", k, chain, spec))
    chain, spec = c2.make_catalog("cut_corner_triangle", {})
    bodies.append(("cut_corner_triangle", 3, chain, spec))
    chain, spec = c2.make_catalog("rectangle", {"w": 2.0, "h": 1.0})
    bodies.append(("rectangle_2x1", 2, chain, spec))
    chain, spec = c2.make_catalog("disk", {})
    for k in range(2, 9):
        bodies.append((f"disk_k{k}", k, chain, spec))
    return bodies


def distinct_bodies():
    """One entry per geometric body (the disk appears once)."""
    seen, out = set(), []
    for label, _k, chain, spec in symmetric_catalog():
        key = "disk" if label.startswith("disk_k") else label
        if key not in seen:
            seen.add(key)
            out.append((key, chain, spec))
    return out


def raster_area(spec, n: int) -> float:
    return oracle_offset_area(rasterize(spec, n), 0.0)


def raster_perimeter(raster) -> float:
    """Independent perimeter estimate: the offset area is piecewise
    quadratic in the offset, so fit a quadratic over a short window and
    read off the slope at zero."""
    tmax = float(raster.sorted_inside_dist()[-1])
    w = min(128 * raster.cell, 0.2 * tmax)
    ts = np.linspace(0.0, w, 129)
    areas = [oracle_offset_area(raster, t) for t in ts]
    return -np.polyfit(ts, areas, 2)[1]


def brute_hausdorff(a, b, samples_per_piece: int = 400) -> float:
    """Dense uniform-sampling Hausdorff lower bound (test oracle)."""
    import cheeger2d.geometry as geo

    def one_sided(src, dst):
        worst = 0.0
        for p in src.pieces:
            for pt in geo.sample_piece(p, samples_per_piece):
                worst = max(worst, geo.distance_to_boundary(dst, pt))
        return worst

    return max(one_sided(a, b), one_sided(b, a))


SQRT_PI = math.sqrt(math.pi)

# hand-derived reference values, each from an independent route:
# unit square: (1-2s)^2 = pi s^2  =>  s = 1/(2+sqrt(pi)), h = 2+sqrt(pi)
SQUARE_S = 1.0 / (2.0 + SQRT_PI)
SQUARE_H = 2.0 + SQRT_PI
# 2x1 rectangle: (2-2s)(1-2s) = pi s^2  =>  (4-pi)s^2 - 6s + 2 = 0
RECT_S = (3.0 - math.sqrt(1.0 + 2.0 * math.pi)) / (4.0 - math.pi)
# equilateral triangle side 1: offsets are similar triangles, so
# sqrt(A)(1 - s/r) = sqrt(pi) s with r = 1/(2 sqrt(3)), A = sqrt(3)/4,
# giving h = 1/r + sqrt(pi/A)
TRIANGLE_R = 1.0 / (2.0 * math.sqrt(3.0))
TRIANGLE_A = math.sqrt(3.0) / 4.0
TRIANGLE_H = 1.0 / TRIANGLE_R + math.sqrt(math.pi / TRIANGLE_A)
# Reuleaux triangle of width 1: equilateral triangle plus three circular
# segments of radius 1 and angle pi/3
REULEAUX_AREA = 0.5 * (math.pi - math.sqrt(3.0))
REULEAUX_PERIMETER = math.pi


def unit_square_spec():
    """Axis-aligned unit square [-1/2, 1/2]^2."""
    return c2.build_spec([c2.Halfplane(1.0, 0.0, 0.5),
                          c2.Halfplane(-1.0, 0.0, 0.5),
                          c2.Halfplane(0.0, 1.0, 0.5),
                          c2.Halfplane(0.0, -1.0, 0.5)], [])
