"""Planar convex bodies bounded by line segments and circular arcs.

A body is represented by its boundary: a closed counterclockwise
:class:`BoundaryChain` of :class:`Segment` and :class:`Arc` pieces.  Arcs
always bulge outward, so convexity is equivalent to the outward tangent
angle increasing monotonically along the chain (total turning 2*pi).

Everything here is an immutable value and every operation is a pure
function; concurrent use needs no locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import InvalidBodyError, NumericFailureError

TWO_PI = 2.0 * math.pi

# Positional tolerance for closure/convexity checks, relative to the
# bounding-box diameter of the chain under test.
CHAIN_TOL_REL = 1e-9

# Absolute tolerance for angle comparisons (junction turns, spans).
ANGLE_TOL = 1e-8


def normalize_angle(a: float) -> float:
    """Wrap an angle into [0, 2*pi)."""
    a = math.fmod(a, TWO_PI)
    return a + TWO_PI if a < 0.0 else a


def wrap_to_pi(a: float) -> float:
    """Wrap an angle difference into (-pi, pi]."""
    a = math.fmod(a, TWO_PI)
    if a <= -math.pi:
        a += TWO_PI
    elif a > math.pi:
        a -= TWO_PI
    return a


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidBodyError(f"non-finite point ({self.x}, {self.y})")

    def dist(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)


def rotate_point(p: Point, angle: float, about: Point = Point(0.0, 0.0)) -> Point:
    c, s = math.cos(angle), math.sin(angle)
    dx, dy = p.x - about.x, p.y - about.y
    return Point(about.x + c * dx - s * dy, about.y + s * dx + c * dy)


@dataclass(frozen=True)
class Segment:
    start: Point
    end: Point

    def length(self) -> float:
        return self.start.dist(self.end)

    def start_point(self) -> Point:
        return self.start

    def end_point(self) -> Point:
        return self.end

    def point_at(self, f: float) -> Point:
        return Point(self.start.x + f * (self.end.x - self.start.x),
                     self.start.y + f * (self.end.y - self.start.y))

    def midpoint(self) -> Point:
        return self.point_at(0.5)

    def tangent_angle(self) -> float:
        return math.atan2(self.end.y - self.start.y, self.end.x - self.start.x)

    def tangent_angle_start(self) -> float:
        return self.tangent_angle()

    def tangent_angle_end(self) -> float:
        return self.tangent_angle()

    def normal_angle(self) -> float:
        """Outward normal angle for a CCW chain (tangent rotated -90 deg)."""
        return normalize_angle(self.tangent_angle() - 0.5 * math.pi)


@dataclass(frozen=True)
class Arc:
    """Counterclockwise circular arc.

    ``start_angle`` is normalized into [0, 2*pi) by the factory helpers;
    ``end_angle`` exceeds it by the angular extent, which must lie in
    (0, 2*pi).
    """

    center: Point
    radius: float
    start_angle: float
    end_angle: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise InvalidBodyError(f"arc radius must be positive, got {self.radius}")
        ext = self.end_angle - self.start_angle
        if not (math.isfinite(ext) and 0.0 < ext < TWO_PI * (1.0 + 1e-12)):
            raise InvalidBodyError(f"arc extent must be in (0, 2*pi), got {ext}")

    def extent(self) -> float:
        return self.end_angle - self.start_angle

    def length(self) -> float:
        return self.radius * self.extent()

    def point_at_angle(self, theta: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(theta),
                     self.center.y + self.radius * math.sin(theta))

    def point_at(self, f: float) -> Point:
        return self.point_at_angle(self.start_angle + f * self.extent())

    def start_point(self) -> Point:
        return self.point_at_angle(self.start_angle)

    def end_point(self) -> Point:
        return self.point_at_angle(self.end_angle)

    def midpoint(self) -> Point:
        return self.point_at(0.5)

    def tangent_angle_start(self) -> float:
        return self.start_angle + 0.5 * math.pi

    def tangent_angle_end(self) -> float:
        return self.end_angle + 0.5 * math.pi

    def contains_angle(self, theta: float, slack: float = 0.0) -> bool:
        off = normalize_angle(theta - self.start_angle)
        if off <= self.extent() + slack:
            return True
        return off >= TWO_PI - slack


BoundaryPiece = Union[Segment, Arc]


def make_arc(center: Point, radius: float, start_angle: float, extent: float) -> Arc:
    """Arc factory that normalizes the start angle into [0, 2*pi)."""
    a0 = normalize_angle(start_angle)
    return Arc(center, radius, a0, a0 + extent)


@dataclass(frozen=True)
class BoundaryChain:
    pieces: tuple[BoundaryPiece, ...]

    def __len__(self) -> int:
        return len(self.pieces)

    def vertices(self) -> list[Point]:
        """Junction points (start point of every piece)."""
        return [p.start_point() for p in self.pieces]

    def bbox(self) -> tuple[float, float, float, float]:
        xs: list[float] = []
        ys: list[float] = []
        for p in self.pieces:
            for q in _piece_bbox_points(p):
                xs.append(q.x)
                ys.append(q.y)
        return min(xs), min(ys), max(xs), max(ys)

    def diameter(self) -> float:
        x0, y0, x1, y1 = self.bbox()
        d = math.hypot(x1 - x0, y1 - y0)
        return d if d > 0.0 else 1.0

    def is_polygon(self) -> bool:
        return all(isinstance(p, Segment) for p in self.pieces)


def _piece_bbox_points(piece: BoundaryPiece) -> list[Point]:
    if isinstance(piece, Segment):
        return [piece.start, piece.end]
    pts = [piece.start_point(), piece.end_point()]
    for k in range(4):
        theta = k * 0.5 * math.pi
        if piece.contains_angle(theta):
            pts.append(piece.point_at_angle(theta))
    return pts


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChainDiagnostics:
    ok: bool
    tol: float
    signed_area: float
    orientation_ok: bool
    total_turning: float
    closure_gaps: tuple[tuple[int, float], ...]   # (piece index, gap size)
    reflex_junctions: tuple[tuple[int, float], ...]  # (junction index, turn)
    piece_faults: tuple[tuple[int, str], ...]

    def summary(self) -> str:
        if self.ok:
            return "valid chain"
        msgs = []
        for i, g in self.closure_gaps:
            msgs.append(f"closure gap {g:.3g} after piece {i}")
        if not self.orientation_ok:
            msgs.append(f"orientation not CCW (signed area {self.signed_area:.3g})")
        for i, t in self.reflex_junctions:
            msgs.append(f"reflex vertex at junction {i} (turn {t:.3g} rad)")
        for i, m in self.piece_faults:
            msgs.append(f"piece {i}: {m}")
        return "; ".join(msgs)


def _signed_area(chain: BoundaryChain) -> float:
    acc = 0.0
    for p in chain.pieces:
        a, b = p.start_point(), p.end_point()
        acc += a.x * b.y - b.x * a.y
    acc *= 0.5
    for p in chain.pieces:
        if isinstance(p, Arc):
            d = p.extent()
            acc += 0.5 * p.radius * p.radius * (d - math.sin(d))
    return acc


def junction_turns(chain: BoundaryChain) -> list[float]:
    """Turning angle at each junction: from the end tangent of piece i-1 to
    the start tangent of piece i, wrapped to (-pi, pi]."""
    n = len(chain.pieces)
    turns = []
    for i in range(n):
        prev = chain.pieces[i - 1]
        cur = chain.pieces[i]
        turns.append(wrap_to_pi(cur.tangent_angle_start() - prev.tangent_angle_end()))
    return turns


def validate(chain: BoundaryChain, tol: float | None = None) -> ChainDiagnostics:
    """Diagnostic chain check: closure, CCW orientation, convexity.

    Never raises; returns per-piece findings so callers can report the
    offending index.
    """
    if len(chain.pieces) == 0:
        return ChainDiagnostics(False, 0.0, 0.0, False, 0.0, (), (),
                                ((0, "empty chain"),))
    if tol is None:
        tol = CHAIN_TOL_REL * chain.diameter()

    faults = []
    for i, p in enumerate(chain.pieces):
        if p.length() <= tol:
            faults.append((i, f"zero-length piece (length {p.length():.3g})"))

    gaps = []
    n = len(chain.pieces)
    for i in range(n):
        g = chain.pieces[i].end_point().dist(chain.pieces[(i + 1) % n].start_point())
        if g > tol:
            gaps.append((i, g))

    area2 = _signed_area(chain)
    orientation_ok = area2 > 0.0

    turns = junction_turns(chain)
    reflex = [(i, t) for i, t in enumerate(turns) if t < -ANGLE_TOL]
    total = sum(turns) + sum(p.extent() for p in chain.pieces if isinstance(p, Arc))
    turning_ok = abs(total - TWO_PI) <= 1e-6

    ok = (not faults and not gaps and orientation_ok and not reflex and turning_ok)
    return ChainDiagnostics(ok, tol, area2, orientation_ok, total,
                            tuple(gaps), tuple(reflex), tuple(faults))


def require_valid(chain: BoundaryChain, context: str = "chain") -> None:
    diag = validate(chain)
    if not diag.ok:
        raise InvalidBodyError(f"invalid {context}: {diag.summary()}")


# ---------------------------------------------------------------------------
# measures
# ---------------------------------------------------------------------------

def area(chain: BoundaryChain) -> float:
    """Euclidean area: shoelace over piece endpoints plus circular-segment
    corrections for arc pieces."""
    require_valid(chain)
    return _signed_area(chain)


def perimeter(chain: BoundaryChain) -> float:
    require_valid(chain)
    return sum(p.length() for p in chain.pieces)


def centroid(chain: BoundaryChain) -> Point:
    require_valid(chain)
    a = _signed_area(chain)
    if a <= 0.0:
        raise InvalidBodyError("centroid of a zero-area chain")
    mx = my = 0.0
    for p in chain.pieces:
        s, e = p.start_point(), p.end_point()
        cross = s.x * e.y - e.x * s.y
        mx += cross * (s.x + e.x) / 6.0
        my += cross * (s.y + e.y) / 6.0
    for p in chain.pieces:
        if isinstance(p, Arc):
            d = p.extent()
            seg_area = 0.5 * p.radius * p.radius * (d - math.sin(d))
            if seg_area <= 0.0:
                continue
            # centroid of the circular segment lies on the bisector
            off = 4.0 * p.radius * math.sin(0.5 * d) ** 3 / (3.0 * (d - math.sin(d)))
            mid = 0.5 * (p.start_angle + p.end_angle)
            mx += seg_area * (p.center.x + off * math.cos(mid))
            my += seg_area * (p.center.y + off * math.sin(mid))
    return Point(mx / a, my / a)


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

def point_to_piece_distance(pt: Point, piece: BoundaryPiece) -> float:
    if isinstance(piece, Segment):
        ax, ay = piece.start.x, piece.start.y
        dx, dy = piece.end.x - ax, piece.end.y - ay
        l2 = dx * dx + dy * dy
        if l2 == 0.0:
            return pt.dist(piece.start)
        t = ((pt.x - ax) * dx + (pt.y - ay) * dy) / l2
        t = min(1.0, max(0.0, t))
        return math.hypot(pt.x - (ax + t * dx), pt.y - (ay + t * dy))
    wx, wy = pt.x - piece.center.x, pt.y - piece.center.y
    d = math.hypot(wx, wy)
    if d < 1e-300:
        return piece.radius
    if piece.contains_angle(math.atan2(wy, wx)):
        return abs(d - piece.radius)
    return min(pt.dist(piece.start_point()), pt.dist(piece.end_point()))


def distance_to_boundary(chain: BoundaryChain, pt: Point) -> float:
    """Distance from a point to the boundary curve (defined everywhere)."""
    return min(point_to_piece_distance(pt, p) for p in chain.pieces)


def containment_margin(chain: BoundaryChain, pt: Point) -> float:
    """Signed violation of the supporting halfplanes of a convex chain.

    <= 0 means the point lies in the body; > 0 is the distance-like margin
    by which some supporting halfplane is violated.
    """
    worst = -math.inf
    for p in chain.pieces:
        if isinstance(p, Segment):
            tx, ty = p.end.x - p.start.x, p.end.y - p.start.y
            ln = math.hypot(tx, ty)
            if ln == 0.0:
                continue
            nx, ny = ty / ln, -tx / ln
            m = nx * (pt.x - p.start.x) + ny * (pt.y - p.start.y)
        else:
            wx, wy = pt.x - p.center.x, pt.y - p.center.y
            d = math.hypot(wx, wy)
            if d < 1e-300:
                m = -p.radius
            elif p.contains_angle(math.atan2(wy, wx)):
                m = d - p.radius
            else:
                m0 = (math.cos(p.start_angle) * wx + math.sin(p.start_angle) * wy
                      - p.radius)
                m1 = (math.cos(p.end_angle) * wx + math.sin(p.end_angle) * wy
                      - p.radius)
                m = max(m0, m1)
        worst = max(worst, m)
    return worst


def piece_support(piece: BoundaryPiece, ux: float, uy: float) -> float:
    """max of u . x over the piece (u need not be unit for comparisons at
    fixed u, but callers pass unit vectors)."""
    if isinstance(piece, Segment):
        return max(ux * piece.start.x + uy * piece.start.y,
                   ux * piece.end.x + uy * piece.end.y)
    if piece.contains_angle(math.atan2(uy, ux)):
        return ux * piece.center.x + uy * piece.center.y + piece.radius
    a, b = piece.start_point(), piece.end_point()
    return max(ux * a.x + uy * a.y, ux * b.x + uy * b.y)


def support_value(chain: BoundaryChain, ux: float, uy: float) -> float:
    return max(piece_support(p, ux, uy) for p in chain.pieces)


def piece_farthest_from(piece: BoundaryPiece, p: Point,
                        center_tol: float = 1e-12) -> tuple[float, Point | None]:
    """Farthest point of a piece from ``p``.

    Returns ``(distance, point)``; the point is ``None`` when the whole
    piece attains the maximum (an arc centered at ``p``).
    """
    if isinstance(piece, Segment):
        da, db = p.dist(piece.start), p.dist(piece.end)
        return (da, piece.start) if da >= db else (db, piece.end)
    wx, wy = piece.center.x - p.x, piece.center.y - p.y
    d = math.hypot(wx, wy)
    if d <= center_tol * max(1.0, piece.radius):
        return piece.radius, None
    theta = math.atan2(wy, wx)
    if piece.contains_angle(theta):
        return d + piece.radius, piece.point_at_angle(theta)
    a, b = piece.start_point(), piece.end_point()
    da, db = p.dist(a), p.dist(b)
    return (da, a) if da >= db else (db, b)


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def translate_piece(piece: BoundaryPiece, dx: float, dy: float) -> BoundaryPiece:
    if isinstance(piece, Segment):
        return Segment(Point(piece.start.x + dx, piece.start.y + dy),
                       Point(piece.end.x + dx, piece.end.y + dy))
    return Arc(Point(piece.center.x + dx, piece.center.y + dy), piece.radius,
               piece.start_angle, piece.end_angle)


def rotate_piece(piece: BoundaryPiece, angle: float,
                 about: Point = Point(0.0, 0.0)) -> BoundaryPiece:
    if isinstance(piece, Segment):
        return Segment(rotate_point(piece.start, angle, about),
                       rotate_point(piece.end, angle, about))
    return make_arc(rotate_point(piece.center, angle, about), piece.radius,
                    piece.start_angle + angle, piece.extent())


def scale_piece(piece: BoundaryPiece, factor: float) -> BoundaryPiece:
    if factor <= 0.0:
        raise InvalidBodyError("scale factor must be positive")
    if isinstance(piece, Segment):
        return Segment(Point(piece.start.x * factor, piece.start.y * factor),
                       Point(piece.end.x * factor, piece.end.y * factor))
    return Arc(Point(piece.center.x * factor, piece.center.y * factor),
               piece.radius * factor, piece.start_angle, piece.end_angle)


def translate_chain(chain: BoundaryChain, dx: float, dy: float) -> BoundaryChain:
    return BoundaryChain(tuple(translate_piece(p, dx, dy) for p in chain.pieces))


def rotate_chain(chain: BoundaryChain, angle: float,
                 about: Point = Point(0.0, 0.0)) -> BoundaryChain:
    return BoundaryChain(tuple(rotate_piece(p, angle, about) for p in chain.pieces))


def scale_chain(chain: BoundaryChain, factor: float) -> BoundaryChain:
    return BoundaryChain(tuple(scale_piece(p, factor) for p in chain.pieces))


# ---------------------------------------------------------------------------
# sampling / splitting / locating
# ---------------------------------------------------------------------------

def sample_piece(piece: BoundaryPiece, count: int) -> list[Point]:
    """``count`` points uniform in parameter, endpoints included (count >= 2)."""
    count = max(2, count)
    return [piece.point_at(i / (count - 1)) for i in range(count)]


def split_piece_at(piece: BoundaryPiece, f: float) -> tuple[BoundaryPiece, BoundaryPiece]:
    """Split at relative parameter f in (0, 1)."""
    if not 0.0 < f < 1.0:
        raise ValueError(f"split parameter must be in (0,1), got {f}")
    if isinstance(piece, Segment):
        mid = piece.point_at(f)
        return Segment(piece.start, mid), Segment(mid, piece.end)
    cut = piece.start_angle + f * piece.extent()
    return (Arc(piece.center, piece.radius, piece.start_angle, cut),
            make_arc(piece.center, piece.radius, cut, piece.end_angle - cut))


def locate_point(chain: BoundaryChain, pt: Point) -> tuple[int, float, float]:
    """Locate the chain point nearest to ``pt``.

    Returns ``(piece index, relative parameter in [0,1], distance)``.
    """
    best = (0, 0.0, math.inf)
    for i, p in enumerate(chain.pieces):
        if isinstance(p, Segment):
            ax, ay = p.start.x, p.start.y
            dx, dy = p.end.x - ax, p.end.y - ay
            l2 = dx * dx + dy * dy
            t = 0.0 if l2 == 0.0 else ((pt.x - ax) * dx + (pt.y - ay) * dy) / l2
            t = min(1.0, max(0.0, t))
            d = pt.dist(p.point_at(t))
        else:
            wx, wy = pt.x - p.center.x, pt.y - p.center.y
            if math.hypot(wx, wy) < 1e-300:
                t, d = 0.0, p.radius
            else:
                theta = math.atan2(wy, wx)
                off = normalize_angle(theta - p.start_angle)
                if off <= p.extent():
                    t = off / p.extent()
                    d = pt.dist(p.point_at(t))
                else:
                    d0, d1 = pt.dist(p.start_point()), pt.dist(p.end_point())
                    t, d = (0.0, d0) if d0 <= d1 else (1.0, d1)
        if d < best[2]:
            best = (i, t, d)
    return best


# ---------------------------------------------------------------------------
# Hausdorff distance between chains
# ---------------------------------------------------------------------------

def _point_sup_over_piece(piece: BoundaryPiece, z: Point) -> float:
    """max over x in piece of |x - z| (closed form)."""
    d, _ = piece_farthest_from(piece, z)
    return d


def _dist_to_pieces(pt: Point, pieces: tuple[BoundaryPiece, ...]) -> float:
    return min(point_to_piece_distance(pt, p) for p in pieces)


def _spans_subset(inner: Arc, outer: Arc, slack: float) -> bool:
    off = normalize_angle(inner.start_angle - outer.start_angle)
    if off >= TWO_PI - slack:
        off = 0.0
    if off > outer.extent() + slack:
        return False
    return off + inner.extent() <= outer.extent() + 2.0 * slack


def _sup_bound_pair(q: BoundaryPiece, b: BoundaryPiece, scale: float) -> float:
    """A valid upper bound of sup_{x in q} dist(x, b)."""
    if isinstance(q, Segment) and isinstance(b, Segment):
        # distance to a convex set is convex along a segment: max at the ends
        return max(point_to_piece_distance(q.start, b),
                   point_to_piece_distance(q.end, b))
    bounds = [min(_point_sup_over_piece(q, b.start_point()),
                  _point_sup_over_piece(q, b.midpoint()),
                  _point_sup_over_piece(q, b.end_point()))]
    samp = max(point_to_piece_distance(q.start_point(), b),
               point_to_piece_distance(q.midpoint(), b),
               point_to_piece_distance(q.end_point(), b))
    bounds.append(samp + 0.25 * q.length())
    if isinstance(b, Arc):
        tol = 1e-9 * max(scale, 1e-300)
        if isinstance(q, Arc):
            # concentric arcs with angular coverage: radial gap is exact
            c_gap = q.center.dist(b.center)
            if (c_gap <= 1e-9 * max(q.radius, b.radius)
                    and _spans_subset(q, b, 1e-12)):
                bounds.append(abs(q.radius - b.radius) + c_gap)
        # generic coverage: if the whole piece projects (angularly, about
        # b's center) into b's span, the radial distance is exact.  The
        # angular position along q moves at most len/dmin, so padding the
        # endpoint interval by that much is a safe over-estimate.
        s0, e0 = q.start_point(), q.end_point()
        a0 = math.atan2(s0.y - b.center.y, s0.x - b.center.x)
        a1 = math.atan2(e0.y - b.center.y, e0.x - b.center.x)
        dmin = point_to_piece_distance(b.center, q)
        if dmin > tol:
            pad = q.length() / dmin
            width = abs(wrap_to_pi(a1 - a0))
            if width + 2.0 * pad < math.pi:
                lo = a0 if wrap_to_pi(a1 - a0) >= 0.0 else a1
                covered = make_arc(b.center, b.radius, lo - pad,
                                   width + 2.0 * pad)
                if _spans_subset(covered, b, 1e-12):
                    dmax = _point_sup_over_piece(q, b.center)
                    bounds.append(max(abs(dmax - b.radius),
                                      abs(dmin - b.radius)))
    else:
        # q is an arc, b a segment: if q stays inside b's orthogonal slab,
        # the distance to b is the distance to b's line, whose extremes
        # over an arc are support values
        ux, uy = b.end.x - b.start.x, b.end.y - b.start.y
        ln = math.hypot(ux, uy)
        if ln > 0.0:
            ux, uy = ux / ln, uy / ln
            s0, e0 = q.start_point(), q.end_point()
            p0 = ux * (s0.x - b.start.x) + uy * (s0.y - b.start.y)
            p1 = ux * (e0.x - b.start.x) + uy * (e0.y - b.start.y)
            pad = q.length()
            if min(p0, p1) - pad >= 0.0 and max(p0, p1) + pad <= ln:
                nx, ny = uy, -ux
                c = nx * b.start.x + ny * b.start.y
                smax = piece_support(q, nx, ny) - c
                smin = -piece_support(q, -nx, -ny) - c
                bounds.append(max(abs(smax), abs(smin)))
    return min(bounds)


def sup_distance_piece_to_chain(piece: BoundaryPiece,
                                targets: tuple[BoundaryPiece, ...],
                                eps: float,
                                lb: float = 0.0,
                                node_cap: int = 200000) -> float:
    """sup over the piece of the distance to a target piece set.

    Branch-and-bound with exact point-to-piece distances as lower bounds and
    closed-form pair bounds as upper bounds; the returned value underestimates
    the true supremum by at most ``eps``.
    """
    scale = max(piece.length(), 1.0)
    best = lb
    stack = [piece]
    nodes = 0
    while stack:
        q = stack.pop()
        nodes += 1
        if nodes > node_cap:
            raise NumericFailureError(
                f"piece-to-chain supremum did not converge within {node_cap} nodes "
                f"(eps={eps:.3g})")
        for z in (q.start_point(), q.midpoint(), q.end_point()):
            d = _dist_to_pieces(z, targets)
            if d > best:
                best = d
        ub = min(_sup_bound_pair(q, b, scale) for b in targets)
        if ub <= best + eps:
            continue
        a, b2 = split_piece_at(q, 0.5)
        stack.append(a)
        stack.append(b2)
    return best


def chain_hausdorff(a: BoundaryChain, b: BoundaryChain, eps: float) -> float:
    """Symmetric Hausdorff distance between two boundary curves.

    Adaptive refinement with exact point-to-piece distances; the result is
    accurate to ``eps``.
    """
    best = 0.0
    for p in a.pieces:
        best = sup_distance_piece_to_chain(p, b.pieces, eps, lb=best)
    for p in b.pieces:
        best = sup_distance_piece_to_chain(p, a.pieces, eps, lb=best)
    return best
