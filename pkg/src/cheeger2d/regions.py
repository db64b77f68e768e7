"""Convex bodies as intersections of halfplanes and disks.

This representation is closed under inner offsetting: eroding the body by t
just shifts every halfplane inward by t and shrinks every disk radius by t,
because erosion by a disk distributes over intersection.  Boundary
extraction walks every constraint curve, intersects it against all other
constraints, and stitches the surviving pieces into a counterclockwise
:class:`~cheeger2d.geometry.BoundaryChain`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import geometry as geo
from .errors import (DegenerateBodyError, EmptyBodyError, InvalidBodyError,
                     NumericFailureError)
from .geometry import Arc, BoundaryChain, Point, Segment, TWO_PI

# A constraint whose curve stays farther than this (times the diameter) from
# the body is inactive and gets pruned at construction time.
PRUNE_TOL_REL = 1e-12

# Pieces shorter than this (times a crude scale estimate) are dropped during
# extraction; slivers below it count as empty.
PIECE_TOL_REL = 1e-14

# Closure floor for extracted chains, relative to the coordinate scale (the
# body near its inradius is tiny, but intersection noise scales with the
# coordinates, not with the shrunken diameter).
CLOSURE_FLOOR_REL = 1e-13

INRADIUS_TOL_REL = 1e-12


@dataclass(frozen=True)
class Halfplane:
    """{x : nx*x + ny*y <= c} with (nx, ny) a unit vector."""
    nx: float
    ny: float
    c: float


@dataclass(frozen=True)
class DiskConstraint:
    cx: float
    cy: float
    r: float


@dataclass(frozen=True)
class ConstraintSpec:
    halfplanes: tuple[Halfplane, ...]
    disks: tuple[DiskConstraint, ...]

    def is_polygon(self) -> bool:
        return len(self.disks) == 0

    def scale_hint(self) -> float:
        s = 1e-300
        for h in self.halfplanes:
            s = max(s, abs(h.c))
        for d in self.disks:
            s = max(s, math.hypot(d.cx, d.cy) + d.r)
        return max(s, 1e-300)


class _EmptyRegion:
    """Marker for an erosion that emptied the body."""

    def __repr__(self):
        return "EMPTY_REGION"


EMPTY_REGION = _EmptyRegion()


def is_empty(region) -> bool:
    return region is EMPTY_REGION


def contains(spec: ConstraintSpec, pt: Point, tol: float = 0.0) -> bool:
    for h in spec.halfplanes:
        if h.nx * pt.x + h.ny * pt.y > h.c + tol:
            return False
    for d in spec.disks:
        if math.hypot(pt.x - d.cx, pt.y - d.cy) > d.r + tol:
            return False
    return True


# ---------------------------------------------------------------------------
# construction / validation
# ---------------------------------------------------------------------------

def make_halfplane(nx: float, ny: float, c: float) -> Halfplane:
    n = math.hypot(nx, ny)
    if not (math.isfinite(n) and n > 0.0) or not math.isfinite(c):
        raise InvalidBodyError(f"bad halfplane normal ({nx}, {ny})")
    if abs(n - 1.0) > 1e-9:
        raise InvalidBodyError(
            f"halfplane normal must be unit length (got |n|={n!r}); "
            "normalize the input")
    return Halfplane(nx / n, ny / n, c)


def make_disk(cx: float, cy: float, r: float) -> DiskConstraint:
    if not (math.isfinite(r) and r > 0.0):
        raise InvalidBodyError(f"disk radius must be positive, got {r}")
    if not (math.isfinite(cx) and math.isfinite(cy)):
        raise InvalidBodyError("non-finite disk center")
    return DiskConstraint(cx, cy, r)


def _is_bounded(spec: ConstraintSpec) -> bool:
    if spec.disks:
        return True
    if len(spec.halfplanes) < 3:
        return False
    angles = sorted(geo.normalize_angle(math.atan2(h.ny, h.nx))
                    for h in spec.halfplanes)
    gaps = [angles[i + 1] - angles[i] for i in range(len(angles) - 1)]
    gaps.append(angles[0] + TWO_PI - angles[-1])
    return max(gaps) < math.pi - 1e-12


def build_spec(halfplanes, disks, prune: bool = True) -> ConstraintSpec:
    """Validated constructor: dedupes, checks boundedness and nonemptiness,
    and prunes constraints whose boundary does not touch the body."""
    hs: list[Halfplane] = []
    for h in halfplanes:
        h = make_halfplane(h.nx, h.ny, h.c) if isinstance(h, Halfplane) \
            else make_halfplane(*h)
        if not any(abs(h.nx - g.nx) < 1e-12 and abs(h.ny - g.ny) < 1e-12
                   and abs(h.c - g.c) < 1e-12 * max(1.0, abs(g.c))
                   for g in hs):
            hs.append(h)
    ds: list[DiskConstraint] = []
    for d in disks:
        d = make_disk(d.cx, d.cy, d.r) if isinstance(d, DiskConstraint) \
            else make_disk(*d)
        if not any(abs(d.cx - e.cx) < 1e-12 and abs(d.cy - e.cy) < 1e-12
                   and abs(d.r - e.r) < 1e-12 * max(1.0, e.r) for e in ds):
            ds.append(d)
    if not hs and not ds:
        raise InvalidBodyError("no constraints given")
    spec = ConstraintSpec(tuple(hs), tuple(ds))
    if not _is_bounded(spec):
        raise InvalidBodyError(
            "constraint intersection is unbounded (halfplane normals do not "
            "positively span the plane and no disk is present)")
    chain = extract_boundary(spec)   # raises if empty/degenerate
    if prune:
        spec = _prune_inactive(spec, chain)
    return spec


def _prune_inactive(spec: ConstraintSpec, chain: BoundaryChain) -> ConstraintSpec:
    tol = PRUNE_TOL_REL * chain.diameter()
    hs = [h for h in spec.halfplanes
          if geo.support_value(chain, h.nx, h.ny) >= h.c - tol]
    ds = []
    for d in spec.disks:
        far = max(geo.piece_farthest_from(p, Point(d.cx, d.cy))[0]
                  for p in chain.pieces)
        if far >= d.r - tol:
            ds.append(d)
    return ConstraintSpec(tuple(hs), tuple(ds))


def spec_from_polygon(vertices: list[Point]) -> ConstraintSpec:
    """Convex CCW polygon -> halfplane spec.

    Rejects non-convex or clockwise input, naming the offending vertex.
    """
    pts = [Point(p.x, p.y) for p in vertices]
    if len(pts) >= 2 and pts[0].dist(pts[-1]) < 1e-15:
        pts = pts[:-1]
    if len(pts) < 3:
        raise InvalidBodyError("polygon needs at least 3 vertices")
    n = len(pts)
    area2 = sum(pts[i].x * pts[(i + 1) % n].y - pts[(i + 1) % n].x * pts[i].y
                for i in range(n))
    if area2 <= 0.0:
        raise InvalidBodyError("polygon vertices must be in CCW order "
                               f"(signed area {0.5 * area2:.3g})")
    scale = max(max(abs(p.x), abs(p.y)) for p in pts)
    for i in range(n):
        a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
        cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x)
        if cross < -1e-12 * max(1.0, scale * scale):
            raise InvalidBodyError(f"polygon is not convex: reflex vertex {i} "
                                   f"at ({b.x}, {b.y})")
    hs = []
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        tx, ty = b.x - a.x, b.y - a.y
        ln = math.hypot(tx, ty)
        if ln <= 1e-15 * max(1.0, scale):
            continue   # repeated vertex
        nx, ny = ty / ln, -tx / ln
        hs.append(Halfplane(nx, ny, nx * a.x + ny * a.y))
    return build_spec(hs, [])


# ---------------------------------------------------------------------------
# transforms (used by the catalog and the scaling-covariance checks)
# ---------------------------------------------------------------------------

def scale_spec(spec: ConstraintSpec, factor: float) -> ConstraintSpec:
    if factor <= 0.0:
        raise InvalidBodyError("scale factor must be positive")
    return ConstraintSpec(
        tuple(Halfplane(h.nx, h.ny, h.c * factor) for h in spec.halfplanes),
        tuple(DiskConstraint(d.cx * factor, d.cy * factor, d.r * factor)
              for d in spec.disks))


def translate_spec(spec: ConstraintSpec, dx: float, dy: float) -> ConstraintSpec:
    return ConstraintSpec(
        tuple(Halfplane(h.nx, h.ny, h.c + h.nx * dx + h.ny * dy)
              for h in spec.halfplanes),
        tuple(DiskConstraint(d.cx + dx, d.cy + dy, d.r) for d in spec.disks))


def rotate_spec(spec: ConstraintSpec, angle: float) -> ConstraintSpec:
    c, s = math.cos(angle), math.sin(angle)
    return ConstraintSpec(
        tuple(Halfplane(c * h.nx - s * h.ny, s * h.nx + c * h.ny, h.c)
              for h in spec.halfplanes),
        tuple(DiskConstraint(c * d.cx - s * d.cy, s * d.cx + c * d.cy, d.r)
              for d in spec.disks))


# ---------------------------------------------------------------------------
# erosion
# ---------------------------------------------------------------------------

def erode(spec: ConstraintSpec, t: float):
    """Inner parallel body at distance t (its closure).

    Returns :data:`EMPTY_REGION` when the erosion has no interior left,
    which includes the degenerate sliver case.
    """
    if t < 0.0:
        raise InvalidBodyError(f"erosion distance must be >= 0, got {t}")
    if t == 0.0:
        return spec
    tol = PIECE_TOL_REL * spec.scale_hint()
    ds = []
    for d in spec.disks:
        if d.r - t <= tol:
            return EMPTY_REGION
        ds.append(DiskConstraint(d.cx, d.cy, d.r - t))
    eroded = ConstraintSpec(
        tuple(Halfplane(h.nx, h.ny, h.c - t) for h in spec.halfplanes),
        tuple(ds))
    try:
        extract_boundary(eroded)
    except (EmptyBodyError, DegenerateBodyError):
        return EMPTY_REGION
    return eroded


# ---------------------------------------------------------------------------
# boundary extraction
# ---------------------------------------------------------------------------

def _line_interval(h: Halfplane, spec: ConstraintSpec, idx: int,
                   scale: float):
    """Feasible parameter interval of the boundary line of halfplane idx.

    The line is x(u) = c*n + u*d with d = n rotated +90 deg, so increasing u
    walks the body boundary counterclockwise (interior on the left).
    Returns (ulo, uhi) or None.
    """
    px, py = h.c * h.nx, h.c * h.ny
    dx, dy = -h.ny, h.nx
    ulo, uhi = -math.inf, math.inf
    for j, g in enumerate(spec.halfplanes):
        if j == idx:
            continue
        a = g.nx * dx + g.ny * dy
        b = g.c - (g.nx * px + g.ny * py)
        if abs(a) <= 1e-14:
            if b < 0.0:
                return None
            continue
        u = b / a
        if a > 0.0:
            uhi = min(uhi, u)
        else:
            ulo = max(ulo, u)
    for d in spec.disks:
        wx, wy = px - d.cx, py - d.cy
        b = wx * dx + wy * dy
        c = wx * wx + wy * wy - d.r * d.r
        disc = b * b - c
        if disc < 0.0:
            return None
        root = math.sqrt(disc)
        ulo = max(ulo, -b - root)
        uhi = min(uhi, -b + root)
    if not (math.isfinite(ulo) and math.isfinite(uhi)):
        raise InvalidBodyError("unbounded feasible line in extraction "
                               "(spec not validated?)")
    if uhi - ulo <= PIECE_TOL_REL * scale:
        return None
    return ulo, uhi


def _circle_intervals(d: DiskConstraint, spec: ConstraintSpec, idx: int,
                      scale: float) -> list[tuple[float, float]]:
    """Feasible angular intervals (start, end) on the circle of disk idx,
    split so that none wraps past 2*pi."""
    intervals = [(0.0, TWO_PI)]

    def clip(start: float, ext: float):
        nonlocal intervals
        start = geo.normalize_angle(start)
        parts = [(start, min(start + ext, TWO_PI))]
        if start + ext > TWO_PI:
            parts.append((0.0, start + ext - TWO_PI))
        out = []
        for a, b in intervals:
            for u, v in parts:
                lo, hi = max(a, u), min(b, v)
                if hi > lo:
                    out.append((lo, hi))
        intervals = out

    for g in spec.halfplanes:
        m = (g.c - (g.nx * d.cx + g.ny * d.cy)) / d.r
        if m >= 1.0:
            continue
        if m <= -1.0:
            return []
        alpha = math.acos(m)
        phi = math.atan2(g.ny, g.nx)
        clip(phi + alpha, TWO_PI - 2.0 * alpha)
        if not intervals:
            return []
    for j, e in enumerate(spec.disks):
        if j == idx:
            continue
        ex, ey = e.cx - d.cx, e.cy - d.cy
        dist = math.hypot(ex, ey)
        if dist <= 1e-14 * max(1.0, scale):
            if d.r <= e.r:
                continue
            return []
        m = (dist * dist + d.r * d.r - e.r * e.r) / (2.0 * dist * d.r)
        if m <= -1.0:
            continue
        if m >= 1.0:
            return []
        beta = math.acos(m)
        psi = math.atan2(ey, ex)
        clip(psi - beta, 2.0 * beta)
        if not intervals:
            return []
    return intervals


def _extract_boundary_impl(spec: ConstraintSpec) -> BoundaryChain:
    scale = spec.scale_hint()
    len_tol = PIECE_TOL_REL * scale
    entries: list[tuple[float, int, object]] = []   # (normal angle, idx, piece)

    for i, h in enumerate(spec.halfplanes):
        iv = _line_interval(h, spec, i, scale)
        if iv is None:
            continue
        ulo, uhi = iv
        px, py = h.c * h.nx, h.c * h.ny
        dx, dy = -h.ny, h.nx
        seg = Segment(Point(px + ulo * dx, py + ulo * dy),
                      Point(px + uhi * dx, py + uhi * dy))
        entries.append((geo.normalize_angle(math.atan2(h.ny, h.nx)), i, seg))

    for i, d in enumerate(spec.disks):
        for a, b in _circle_intervals(d, spec, i, scale):
            if (b - a) * d.r <= len_tol:
                continue
            if b - a >= TWO_PI - 1e-12:
                # full circle: split so every piece has extent < 2*pi
                half = Point(d.cx, d.cy)
                entries.append((0.5 * math.pi, i + len(spec.halfplanes),
                                Arc(half, d.r, 0.0, math.pi)))
                entries.append((1.5 * math.pi, i + len(spec.halfplanes),
                                Arc(half, d.r, math.pi, TWO_PI)))
            else:
                mid = geo.normalize_angle(0.5 * (a + b))
                entries.append((mid, i + len(spec.halfplanes),
                                Arc(Point(d.cx, d.cy), d.r, a, b)))

    if not entries:
        raise EmptyBodyError("constraint intersection has no interior")

    entries.sort(key=lambda e: (e[0], e[1]))
    pieces = [e[2] for e in entries]
    # an arc crossing angle 0 was split at the wrap; reassemble it
    if (len(pieces) >= 3 and entries[0][1] == entries[-1][1]
            and isinstance(pieces[0], Arc) and isinstance(pieces[-1], Arc)
            and abs(pieces[-1].end_angle - TWO_PI) < 1e-12
            and abs(pieces[0].start_angle) < 1e-12
            and (TWO_PI - pieces[-1].start_angle) + pieces[0].end_angle
            < TWO_PI - 1e-9):
        first, last = pieces[0], pieces[-1]
        merged = Arc(last.center, last.radius, last.start_angle,
                     TWO_PI + first.end_angle)
        pieces = [merged] + pieces[1:-1]
    pieces = tuple(pieces)
    chain = BoundaryChain(pieces)

    # Closure and orientation are checked here; convexity holds by
    # construction (pieces sorted by outward normal angle) and is verified
    # by full validation on the public chain operations.
    tol = max(geo.CHAIN_TOL_REL * chain.diameter(), CLOSURE_FLOOR_REL * scale)
    n = len(pieces)
    for i in range(n):
        gap = pieces[i].end_point().dist(pieces[(i + 1) % n].start_point())
        if gap > tol:
            raise DegenerateBodyError(
                f"extracted chain has closure gap {gap:.3g} above tolerance "
                f"{tol:.3g} (body at or below the degeneracy threshold)")
    if geo._signed_area(chain) <= 0.0:
        raise DegenerateBodyError(
            f"extracted chain has nonpositive area at piece tolerance "
            f"{PIECE_TOL_REL:g} * scale")
    return chain


@lru_cache(maxsize=1024)
def _extract_cached(spec: ConstraintSpec) -> BoundaryChain:
    return _extract_boundary_impl(spec)


def extract_boundary(spec: ConstraintSpec) -> BoundaryChain:
    """CCW boundary chain of the intersection body.

    Raises :class:`EmptyBodyError` for an empty interior and
    :class:`DegenerateBodyError` for a sliver below tolerance.
    """
    if is_empty(spec):
        raise EmptyBodyError("empty region")
    return _extract_cached(spec)


# ---------------------------------------------------------------------------
# offset area and inradius
# ---------------------------------------------------------------------------

def offset_area(spec: ConstraintSpec, t: float) -> float:
    """Area of the inner parallel body at distance t (0 when empty)."""
    if t < 0.0:
        raise InvalidBodyError(f"offset distance must be >= 0, got {t}")
    if spec.is_polygon():
        from .schedule import polygon_offset_schedule
        return polygon_offset_schedule(extract_boundary(spec)).area_at(t)
    region = erode(spec, t)
    if is_empty(region):
        return 0.0
    try:
        # extraction already guarantees closure and orientation; skip the
        # full convexity validation, which is noise-limited on slivers
        return geo._signed_area(extract_boundary(region))
    except (EmptyBodyError, DegenerateBodyError):
        return 0.0


@dataclass(frozen=True)
class InradiusResult:
    r: float
    witness: Point


def inradius(spec: ConstraintSpec) -> InradiusResult:
    """Largest t with a nonempty inner parallel body, by bisection on
    erosion emptiness; the witness is an incenter estimate."""
    chain = extract_boundary(spec)
    x0, y0, x1, y1 = chain.bbox()
    tol = INRADIUS_TOL_REL * chain.diameter()
    hi = 0.5 * min(x1 - x0, y1 - y0) * (1.0 + 1e-9) + 2.0 * tol
    lo = 0.0

    def box_center(c: BoundaryChain) -> Point:
        bx0, by0, bx1, by1 = c.bbox()
        return Point(0.5 * (bx0 + bx1), 0.5 * (by0 + by1))

    witness = box_center(chain)
    guard = 0
    while not is_empty(erode(spec, hi)):
        hi *= 1.5
        guard += 1
        if guard > 60:
            raise NumericFailureError("inradius upper bound search diverged")
    for _ in range(200):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        region = erode(spec, mid)
        if is_empty(region):
            hi = mid
        else:
            lo = mid
            witness = box_center(extract_boundary(region))
    return InradiusResult(0.5 * (lo + hi), witness)
