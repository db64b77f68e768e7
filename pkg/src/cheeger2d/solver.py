"""Cheeger constants and Cheeger sets of convex bodies.

The solver finds the unique s > 0 at which the inner parallel body at
distance s encloses the same area as a disk of radius s.  The Cheeger set
is then the Minkowski sum of that inner body with the radius-s disk: every
boundary segment translates outward by s, every arc grows its radius by s,
and every vertex is rounded by a radius-s corner arc spanning its exterior
normal cone.  The Cheeger constant is 1/s, which is also the curvature of
the rounded corners.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import geometry as geo
from . import regions
from .errors import InvalidBodyError, NumericFailureError
from .geometry import Arc, BoundaryChain, Segment
from .regions import ConstraintSpec
from .schedule import polygon_offset_schedule

# Corner arcs thinner than this are dropped and their endpoints welded.
CORNER_DROP_TOL = 1e-10

# A chain counts as tangent-continuous when no junction turns more than this.
SMOOTH_TOL = 1e-7

# Default tolerance (relative to the diameter) for boundary-contact
# classification; contact points arise from intersecting independently
# rounded pieces, so it is looser than the construction tolerance.
CONTACT_TOL_REL = 1e-7


@dataclass(frozen=True)
class SolverConfig:
    root_tol: float = 1e-12        # absolute, in s
    containment_tol: float = 1e-9
    max_iters: int = 200

    def __post_init__(self):
        if self.root_tol <= 0 or self.containment_tol <= 0 or self.max_iters <= 0:
            raise InvalidBodyError("solver tolerances must be positive")


@dataclass(frozen=True)
class Contact:
    piece: int
    kind: str   # "boundary" | "interior"


@dataclass(frozen=True)
class CheegerResult:
    s: float
    inner_set: BoundaryChain
    cheeger_set: BoundaryChain
    contacts: tuple[Contact, ...]

    @property
    def h(self) -> float:
        return 1.0 / self.s


# ---------------------------------------------------------------------------
# root solve
# ---------------------------------------------------------------------------

def _solve_polygon(spec: ConstraintSpec, cfg: SolverConfig) -> float:
    sched = polygon_offset_schedule(regions.extract_boundary(spec))

    def f(t: float) -> float:
        return sched.area_at(t) - math.pi * t * t

    for iv in sched.intervals:
        if f(iv.t1) > 0.0:
            continue
        # F(t0+tau) = c + b*tau + a*tau^2 on this interval
        a = iv.cot_sum - math.pi
        b = -(iv.perim0 + 2.0 * math.pi * iv.t0)
        c = iv.area0 - math.pi * iv.t0 * iv.t0
        disc = b * b - 4.0 * a * c
        if disc < 0.0:
            raise NumericFailureError(
                f"no real root in schedule interval [{iv.t0!r}, {iv.t1!r}]")
        tau = 2.0 * c / (-b + math.sqrt(disc))
        s = min(max(iv.t0 + tau, iv.t0), iv.t1)
        return s
    raise NumericFailureError(
        f"area equation had no sign change up to the inradius "
        f"{sched.inradius!r}")


def solve_s(spec: ConstraintSpec, cfg: SolverConfig | None = None) -> float:
    """The unique s > 0 with offset_area(spec, s) = pi * s**2.

    Polygons use the exact per-interval quadratic of the offset schedule;
    bodies with arcs use bisection, which converges because the area
    difference is strictly decreasing up to the inradius.
    """
    cfg = cfg or SolverConfig()
    if regions.is_empty(spec):
        raise InvalidBodyError("cannot solve an empty region")
    if spec.is_polygon():
        return _solve_polygon(spec, cfg)
    lo = 0.0
    hi = regions.inradius(spec).r
    f_lo = regions.offset_area(spec, 0.0)   # = A > 0
    if f_lo <= 0.0:
        raise InvalidBodyError("body has nonpositive area")
    iters = 0
    while hi - lo > cfg.root_tol:
        iters += 1
        if iters > cfg.max_iters:
            raise NumericFailureError(
                f"bisection exhausted {cfg.max_iters} iterations; final "
                f"bracket [{lo!r}, {hi!r}]")
        mid = 0.5 * (lo + hi)
        if regions.offset_area(spec, mid) - math.pi * mid * mid > 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def cheeger_constant(spec: ConstraintSpec, cfg: SolverConfig | None = None) -> float:
    return 1.0 / solve_s(spec, cfg)


# ---------------------------------------------------------------------------
# chain dilation / erosion (Minkowski sum and inner offset on chains)
# ---------------------------------------------------------------------------

def _normal_angle_end(piece) -> float:
    return geo.normalize_angle(piece.tangent_angle_end() - 0.5 * math.pi)


def _normal_angle_start(piece) -> float:
    return geo.normalize_angle(piece.tangent_angle_start() - 0.5 * math.pi)


def dilate_chain(chain: BoundaryChain, s: float) -> BoundaryChain:
    """Minkowski sum of a convex chain with the disk of radius s."""
    if s <= 0.0:
        raise InvalidBodyError(f"dilation radius must be positive, got {s}")
    out: list[geo.BoundaryPiece] = []
    n = len(chain.pieces)
    for i, p in enumerate(chain.pieces):
        if isinstance(p, Segment):
            ang = _normal_angle_start(p)
            dx, dy = s * math.cos(ang), s * math.sin(ang)
            out.append(geo.translate_piece(p, dx, dy))
        else:
            out.append(Arc(p.center, p.radius + s, p.start_angle, p.end_angle))
        q = chain.pieces[(i + 1) % n]
        gap = geo.wrap_to_pi(_normal_angle_start(q) - _normal_angle_end(p))
        if gap < -1e-9:
            raise InvalidBodyError(
                f"chain turns backwards at junction {(i + 1) % n}; "
                "cannot dilate a non-convex chain")
        if gap > CORNER_DROP_TOL:
            out.append(geo.make_arc(p.end_point(), s, _normal_angle_end(p), gap))
    return BoundaryChain(tuple(out))


def erode_chain(chain: BoundaryChain, t: float) -> BoundaryChain:
    """Inner offset of a tangent-continuous chain by t.

    Valid while t does not exceed any arc radius; radius-t arcs collapse to
    their centers (this inverts :func:`dilate_chain`).  Chains with corners
    are rejected: erosion there needs the constraint representation.
    """
    if t <= 0.0:
        raise InvalidBodyError(f"erosion distance must be positive, got {t}")
    turns = geo.junction_turns(chain)
    worst = max(abs(x) for x in turns)
    if worst > SMOOTH_TOL:
        raise InvalidBodyError(
            f"chain erosion needs a tangent-continuous chain; worst junction "
            f"turn is {worst:.3g} rad")
    collapse_tol = 1e-9 * max(1.0, chain.diameter())
    out: list[geo.BoundaryPiece] = []
    for p in chain.pieces:
        if isinstance(p, Segment):
            ang = _normal_angle_start(p)
            out.append(geo.translate_piece(p, -t * math.cos(ang),
                                           -t * math.sin(ang)))
        elif p.radius - t > collapse_tol:
            out.append(Arc(p.center, p.radius - t, p.start_angle, p.end_angle))
        elif p.radius - t < -collapse_tol:
            raise InvalidBodyError(
                f"erosion distance {t} exceeds an arc radius {p.radius}")
        # else: the arc collapses to its center, welding its neighbours
    if len(out) < 2:
        raise InvalidBodyError("chain erosion collapsed the whole body")
    return BoundaryChain(tuple(out))


def build_cheeger_set(spec: ConstraintSpec, s: float) -> BoundaryChain:
    """Cheeger set boundary: inner parallel body at s, dilated back by s."""
    if not (s > 0.0) or not math.isfinite(s):
        raise InvalidBodyError(f"s must be a positive number, got {s}")
    region = regions.erode(spec, s)
    if regions.is_empty(region):
        raise InvalidBodyError(f"s={s!r} is not below the inradius")
    inner = regions.extract_boundary(region)
    cheeger = dilate_chain(inner, s)
    geo.require_valid(cheeger, "Cheeger set boundary")
    return cheeger


# ---------------------------------------------------------------------------
# contact classification and ratio check
# ---------------------------------------------------------------------------

def classify_contacts(omega: BoundaryChain, cheeger: BoundaryChain,
                      tol: float | None = None,
                      s: float | None = None) -> tuple[Contact, ...]:
    """Label every Cheeger-set boundary piece as lying on the body boundary
    or as a free interior arc (necessarily of radius s)."""
    diam = omega.diameter()
    if tol is None:
        tol = CONTACT_TOL_REL * diam

    worst_margin = -math.inf
    for p in cheeger.pieces:
        for pt in geo.sample_piece(p, 9):
            worst_margin = max(worst_margin, geo.containment_margin(omega, pt))
    if worst_margin > tol:
        raise NumericFailureError(
            f"Cheeger set leaves the body by {worst_margin:.3g} "
            f"(tolerance {tol:.3g})")

    eps = min(0.1 * tol, 1e-9 * diam)
    contacts = []
    for i, p in enumerate(cheeger.pieces):
        d = geo.sup_distance_piece_to_chain(p, omega.pieces, eps)
        if d <= tol:
            contacts.append(Contact(i, "boundary"))
        else:
            if not isinstance(p, Arc):
                raise NumericFailureError(
                    f"interior piece {i} of the Cheeger boundary is a segment "
                    f"(distance {d:.3g})")
            if s is not None and abs(p.radius - s) > 1e-9:
                raise NumericFailureError(
                    f"interior arc {i} has radius {p.radius!r}, expected {s!r}")
            contacts.append(Contact(i, "interior"))
    if not any(c.kind == "boundary" for c in contacts):
        raise NumericFailureError("Cheeger set touches no boundary piece")
    return tuple(contacts)


def solve_cheeger(spec: ConstraintSpec,
                  cfg: SolverConfig | None = None) -> CheegerResult:
    """Full pipeline: solve for s, build the Cheeger set, classify contacts."""
    cfg = cfg or SolverConfig()
    omega = regions.extract_boundary(spec)
    s = solve_s(spec, cfg)
    residual = abs(regions.offset_area(spec, s) - math.pi * s * s)
    slope = geo.perimeter(omega) + 2.0 * math.pi * s
    if residual > max(100.0 * cfg.root_tol * slope, 1e-12):
        raise NumericFailureError(
            f"area equation residual {residual:.3g} above solver tolerance")
    inner = regions.extract_boundary(regions.erode(spec, s))
    cheeger = dilate_chain(inner, s)
    geo.require_valid(cheeger, "Cheeger set boundary")

    ctol = cfg.containment_tol * max(1.0, omega.diameter())
    for p in cheeger.pieces:
        for pt in (p.start_point(), p.midpoint()):
            if not regions.contains(spec, pt, ctol):
                raise NumericFailureError(
                    f"Cheeger boundary point ({pt.x}, {pt.y}) escapes the body")
    contacts = classify_contacts(omega, cheeger, s=s)
    return CheegerResult(s, inner, cheeger, contacts)


def verify_ratio(result: CheegerResult) -> float:
    """|perimeter(C) * s / area(C) - 1|: the Cheeger set's own ratio must
    reproduce 1/s."""
    c = result.cheeger_set
    return abs(geo.perimeter(c) * result.s / geo.area(c) - 1.0)
