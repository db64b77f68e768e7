"""Exact inner-offset area schedule for convex polygons.

Offsetting a convex polygon inward by tau keeps the combinatorics fixed
until some edge length reaches zero.  On each combinatorial interval the
area is the quadratic A - P*tau + T*tau**2 where A, P are the snapshot area
and perimeter and T is the sum of cot(theta_i / 2) over interior angles.
Breakpoints are edge-collapse events; the recursion bottoms out when fewer
than three edges survive (a point or a segment), which pins the inradius.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidBodyError, NumericFailureError
from .geometry import BoundaryChain, Point, Segment

_COLLAPSE_TOL_REL = 1e-13


@dataclass(frozen=True)
class ScheduleInterval:
    t0: float
    t1: float
    polygon: tuple[Point, ...]   # snapshot at offset t0
    area0: float
    perim0: float
    cot_sum: float

    def area_at(self, t: float) -> float:
        tau = t - self.t0
        return self.area0 - self.perim0 * tau + self.cot_sum * tau * tau

    def perimeter_at(self, t: float) -> float:
        tau = t - self.t0
        return self.perim0 - 2.0 * self.cot_sum * tau


@dataclass(frozen=True)
class OffsetSchedule:
    intervals: tuple[ScheduleInterval, ...]

    @property
    def inradius(self) -> float:
        return self.intervals[-1].t1

    def breakpoints(self) -> list[float]:
        return [iv.t0 for iv in self.intervals] + [self.inradius]

    def interval_at(self, t: float) -> ScheduleInterval:
        for iv in self.intervals:
            if t <= iv.t1:
                return iv
        return self.intervals[-1]

    def area_at(self, t: float) -> float:
        if t >= self.inradius:
            return 0.0
        return max(0.0, self.interval_at(t).area_at(t))


def _polygon_measures(pts: list[Point]) -> tuple[float, float, float]:
    n = len(pts)
    area2 = 0.0
    perim = 0.0
    cot_sum = 0.0
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        area2 += a.x * b.y - b.x * a.y
        perim += a.dist(b)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        ux, uy = b.x - a.x, b.y - a.y
        vx, vy = c.x - b.x, c.y - b.y
        turn = math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
        # interior angle theta = pi - turn, so cot(theta/2) = tan(turn/2)
        cot_sum += math.tan(0.5 * turn)
    return 0.5 * area2, perim, cot_sum


def _edge_collapse_times(pts: list[Point]) -> list[float]:
    n = len(pts)
    tans = []
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        ux, uy = b.x - a.x, b.y - a.y
        vx, vy = c.x - b.x, c.y - b.y
        tans.append(math.tan(0.5 * math.atan2(ux * vy - uy * vx,
                                              ux * vx + uy * vy)))
    times = []
    for i in range(n):
        shrink = tans[i] + tans[(i + 1) % n]
        length = pts[i].dist(pts[(i + 1) % n])
        times.append(length / shrink if shrink > 0.0 else math.inf)
    return times


def _offset_polygon(pts: list[Point], tau: float, drop_tol: float) -> list[Point]:
    """Move every edge line inward by tau and re-intersect the surviving
    consecutive lines; edges that collapsed at tau disappear."""
    n = len(pts)
    lines = []
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        tx, ty = b.x - a.x, b.y - a.y
        ln = math.hypot(tx, ty)
        nx, ny = ty / ln, -tx / ln
        lines.append((nx, ny, nx * a.x + ny * a.y - tau))
    times = _edge_collapse_times(pts)
    keep = [i for i in range(n) if times[i] > tau + drop_tol]
    if len(keep) < 3:
        return []
    out = []
    m = len(keep)
    for j in range(m):
        n1x, n1y, c1 = lines[keep[j - 1]]
        n2x, n2y, c2 = lines[keep[j]]
        det = n1x * n2y - n1y * n2x
        if abs(det) < 1e-15:
            return []
        out.append(Point((c1 * n2y - c2 * n1y) / det,
                         (n1x * c2 - n2x * c1) / det))
    return out


def _schedule_from_vertices(pts0: tuple[Point, ...]) -> OffsetSchedule:
    scale = max(max(abs(p.x), abs(p.y)) for p in pts0)
    drop_tol = _COLLAPSE_TOL_REL * max(1.0, scale)
    pts = list(pts0)
    t = 0.0
    intervals = []
    for _ in range(len(pts0) + 2):
        area0, perim0, cot_sum = _polygon_measures(pts)
        dt = min(_edge_collapse_times(pts))
        if not math.isfinite(dt) or dt <= 0.0:
            raise NumericFailureError(
                f"polygon offset schedule stalled at t={t!r} (collapse {dt!r})")
        intervals.append(ScheduleInterval(t, t + dt, tuple(pts),
                                          area0, perim0, cot_sum))
        pts = _offset_polygon(pts, dt, drop_tol)
        t += dt
        if len(pts) < 3:
            return OffsetSchedule(tuple(intervals))
    raise NumericFailureError("polygon offset schedule did not terminate")


@lru_cache(maxsize=256)
def _schedule_cached(pts: tuple[Point, ...]) -> OffsetSchedule:
    return _schedule_from_vertices(pts)


def polygon_offset_schedule(polygon: BoundaryChain) -> OffsetSchedule:
    """Piecewise-quadratic inner-offset area schedule of a convex polygon.

    Raises :class:`InvalidBodyError` if the chain has arc pieces.
    """
    if not polygon.is_polygon():
        raise InvalidBodyError("offset schedule is defined for polygons only "
                               "(chain has arc pieces)")
    for i, p in enumerate(polygon.pieces):
        assert isinstance(p, Segment)
        if p.length() <= 0.0:
            raise InvalidBodyError(f"zero-length polygon edge {i}")
    return _schedule_cached(tuple(p.start for p in polygon.pieces))
