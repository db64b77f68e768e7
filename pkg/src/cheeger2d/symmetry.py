"""Rotational symmetry of convex chains: detection, dots and edges, and
the edge-contact regularity report.

A body is k-fold rotationally symmetric when rotating it by 2*pi/k about
some center maps it onto itself.  Any such rotation fixes the area
centroid, so the centroid is the only center candidate worth testing.
Dots are a symmetric choice of boundary points at the circumradius; edges
are the k boundary stretches between consecutive dots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from . import geometry as geo
from .errors import InvalidBodyError, NumericFailureError
from .geometry import Arc, BoundaryChain, BoundaryPiece, Point, Segment, TWO_PI

SYM_TOL_REL = 1e-8        # default symmetry acceptance, times diameter
CONTACT_TOL_REL = 1e-7    # default edge-contact tolerance, times diameter
_ATTAIN_REL = 1e-9        # circumradius attainment slack


@dataclass(frozen=True)
class RotationalSymmetry:
    k: int
    center: Point
    residual: float


@dataclass(frozen=True)
class SymmetryRejection:
    k: int
    center: Point
    residual: float
    tol: float


@dataclass(frozen=True)
class DotsEdges:
    center: Point
    circumradius: float
    dots: tuple[Point, ...]
    edges: tuple[tuple[BoundaryPiece, ...], ...]


@dataclass(frozen=True)
class EdgeContact:
    edge: int
    touched: bool
    witness: Point | None


@dataclass(frozen=True)
class RegularityReport:
    edge_contacts: tuple[EdgeContact, ...]
    cheeger_regular: bool
    rotation_inheritance_gap: float = float("nan")

    def with_gap(self, gap: float) -> "RegularityReport":
        return replace(self, rotation_inheritance_gap=gap)


# ---------------------------------------------------------------------------
# Hausdorff distance (public surface; machinery lives in geometry)
# ---------------------------------------------------------------------------

def hausdorff_distance(a: BoundaryChain, b: BoundaryChain,
                       eps: float | None = None) -> float:
    """Symmetric Hausdorff distance between two boundary curves, via
    adaptive refinement with exact point-to-piece distances."""
    if eps is None:
        eps = 1e-10 * max(a.diameter(), b.diameter())
    return geo.chain_hausdorff(a, b, eps)


# ---------------------------------------------------------------------------
# symmetry detection
# ---------------------------------------------------------------------------

def detect_symmetry(chain: BoundaryChain, k: int, tol: float | None = None):
    """Test invariance under rotation by 2*pi/k about the centroid.

    Returns :class:`RotationalSymmetry` on acceptance, otherwise a
    :class:`SymmetryRejection` carrying the achieved residual.
    """
    if k < 2:
        raise InvalidBodyError(f"symmetry order must be >= 2, got {k}")
    geo.require_valid(chain)
    diam = chain.diameter()
    if tol is None:
        tol = SYM_TOL_REL * diam
    center = geo.centroid(chain)
    rotated = geo.rotate_chain(chain, TWO_PI / k, center)
    residual = geo.chain_hausdorff(chain, rotated,
                                   min(1e-10 * diam, 0.05 * tol))
    if residual <= tol:
        return RotationalSymmetry(k, center, residual)
    return SymmetryRejection(k, center, residual, tol)


# ---------------------------------------------------------------------------
# dots and edges
# ---------------------------------------------------------------------------

def _circumradius_candidates(chain: BoundaryChain, p: Point):
    """Per-piece farthest points from p.

    Returns (R, point_candidates, uniform_arcs) where uniform arcs attain
    the maximum along their whole span (arcs centered at p).
    """
    points: list[tuple[float, Point]] = []
    arcs: list[Arc] = []
    best = 0.0
    for piece in chain.pieces:
        d, pt = geo.piece_farthest_from(piece, p)
        best = max(best, d)
        if pt is None:
            arcs.append(piece)   # whole arc is equidistant from p
        else:
            points.append((d, pt))
            if isinstance(piece, Segment):
                d2 = p.dist(piece.end)
                points.append((d2, piece.end))
    return best, points, arcs


def _min_angle_mod(phi: float, step: float) -> float:
    m = math.fmod(phi, step)
    if m < 0.0:
        m += step
    # angles a hair below a multiple of step are that multiple, up to noise
    if step - m < 1e-9:
        m = 0.0
    return m


def _canonical_dot(chain: BoundaryChain, p: Point, k: int) -> tuple[float, Point]:
    """Circumradius R and the attaining point with the smallest polar angle
    about p within [0, 2*pi/k)."""
    step = TWO_PI / k
    radius, points, arcs = _circumradius_candidates(chain, p)
    slack = _ATTAIN_REL * max(radius, 1e-300)

    best_mod = math.inf
    best_point: Point | None = None
    for d, pt in points:
        if d < radius - slack:
            continue
        phi = geo.normalize_angle(math.atan2(pt.y - p.y, pt.x - p.x))
        m = _min_angle_mod(phi, step)
        if m < best_mod - 1e-12:
            best_mod = m
            best_point = pt
    for arc in arcs:
        if arc.radius < radius - slack:
            continue
        a = geo.normalize_angle(arc.start_angle)
        ext = arc.extent()
        if ext >= step:
            m, phi = 0.0, step * math.ceil(a / step)
        else:
            nxt = step * math.ceil(a / step)
            if nxt <= a + ext:
                m, phi = 0.0, nxt
            else:
                m, phi = _min_angle_mod(a, step), a
        if m < best_mod - 1e-12:
            best_mod = m
            best_point = Point(p.x + radius * math.cos(phi),
                               p.y + radius * math.sin(phi))
    if best_point is None:
        raise NumericFailureError("no circumradius-attaining point found")
    # map the winner into the first sector: all symmetric copies tie on the
    # angle mod step, so pick the copy whose polar angle lies in [0, step)
    phi = geo.normalize_angle(math.atan2(best_point.y - p.y,
                                         best_point.x - p.x))
    m = _min_angle_mod(phi, step)
    j = int(round((phi - m) / step)) % k
    if j:
        best_point = geo.rotate_point(best_point, -j * step, p)
    return radius, best_point


def _cut_piece(piece: BoundaryPiece, f0: float, f1: float) -> BoundaryPiece:
    if isinstance(piece, Segment):
        return Segment(piece.point_at(f0), piece.point_at(f1))
    ext = piece.extent()
    return Arc(piece.center, piece.radius,
               piece.start_angle + f0 * ext, piece.start_angle + f1 * ext)


def _subchain(chain: BoundaryChain, pos0: tuple[int, float],
              pos1: tuple[int, float]) -> tuple[BoundaryPiece, ...]:
    """Pieces of the CCW stretch from pos0 to pos1 (positions are
    (piece index, relative parameter))."""
    n = len(chain.pieces)
    i0, f0 = pos0
    i1, f1 = pos1
    ftol = 1e-12
    out: list[BoundaryPiece] = []
    if i0 == i1 and f0 < f1 - ftol:
        return (_cut_piece(chain.pieces[i0], f0, f1),)
    if f0 < 1.0 - ftol:
        out.append(_cut_piece(chain.pieces[i0], f0, 1.0))
    i = (i0 + 1) % n
    while i != i1:
        out.append(chain.pieces[i])
        i = (i + 1) % n
    if f1 > ftol:
        out.append(_cut_piece(chain.pieces[i1], 0.0, f1))
    if not out:
        raise NumericFailureError("empty boundary stretch between dots")
    return tuple(out)


def dots_and_edges(chain: BoundaryChain, sym: RotationalSymmetry,
                   first_dot: Point | None = None) -> DotsEdges:
    """Choose a symmetric set of k dots at the circumradius and split the
    boundary into the k edges they delimit.

    ``first_dot`` overrides the canonical choice (smallest polar angle in
    [0, 2*pi/k)); it must itself attain the circumradius.
    """
    p = sym.center
    k = sym.k
    diam = chain.diameter()
    radius, canonical = _canonical_dot(chain, p, k)
    if first_dot is not None:
        if abs(p.dist(first_dot) - radius) > 1e-7 * diam:
            raise InvalidBodyError(
                f"supplied dot is at distance {p.dist(first_dot)!r} from the "
                f"center; circumradius is {radius!r}")
        x1 = first_dot
    else:
        x1 = canonical
    dots = [geo.rotate_point(x1, i * TWO_PI / k, p) for i in range(k)]

    positions = []
    for i, d in enumerate(dots):
        idx, f, dist = geo.locate_point(chain, d)
        if dist > 1e-7 * diam:
            raise NumericFailureError(
                f"dot {i} is {dist:.3g} away from the boundary")
        positions.append((idx, f))

    order = sorted(range(k), key=lambda i: positions[i])
    start = order.index(0)
    order = order[start:] + order[:start]
    if order != list(range(k)):
        raise NumericFailureError(
            "dots are not in counterclockwise order along the boundary")

    edges = tuple(_subchain(chain, positions[i], positions[(i + 1) % k])
                  for i in range(k))
    return DotsEdges(p, radius, tuple(dots), edges)


# ---------------------------------------------------------------------------
# edge contacts and symmetry inheritance
# ---------------------------------------------------------------------------

def check_edge_contacts(de: DotsEdges, cheeger: BoundaryChain,
                        tol: float | None = None) -> RegularityReport:
    """For each edge, find a witness point where the Cheeger boundary's
    on-body pieces meet it."""
    boundary = tuple(p for edge in de.edges for p in edge)
    diam = BoundaryChain(boundary).diameter()
    if tol is None:
        tol = CONTACT_TOL_REL * diam
    eps = min(0.1 * tol, 1e-9 * diam)

    contact_pieces = [p for p in cheeger.pieces
                      if geo.sup_distance_piece_to_chain(p, boundary, eps) <= tol]

    results = []
    for i, edge in enumerate(de.edges):
        witness = None
        best = math.inf
        for piece in contact_pieces:
            samples = geo.sample_piece(piece, 65)
            for pt in samples:
                d = min(geo.point_to_piece_distance(pt, e) for e in edge)
                if d < best:
                    best = d
                    witness = pt
        # a contact exactly at a dot touches both adjacent edges
        for dot in (de.dots[i], de.dots[(i + 1) % len(de.dots)]):
            if contact_pieces:
                d = min(geo.point_to_piece_distance(dot, p)
                        for p in contact_pieces)
                if d < best:
                    best = d
                    witness = dot
        touched = best <= tol
        results.append(EdgeContact(i, touched, witness if touched else None))
    regular = all(r.touched for r in results)
    return RegularityReport(tuple(results), regular)


def check_rotation_inheritance(cheeger: BoundaryChain,
                               sym: RotationalSymmetry) -> float:
    """Hausdorff gap between the Cheeger boundary and its 2*pi/k rotation
    about the symmetry center."""
    rotated = geo.rotate_chain(cheeger, TWO_PI / sym.k, sym.center)
    eps = 1e-11 * cheeger.diameter()
    return geo.chain_hausdorff(cheeger, rotated, eps)
