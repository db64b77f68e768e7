"""Catalog of example bodies.

All bodies are centered at the origin in a canonical pose: shapes whose
circumradius is attained at an isolated symmetric point (regular polygons,
Reuleaux polygons, disk-capped polygons, the disk itself) carry a dot on
the positive x-axis.  The rectangle and the cut-corner hexagon keep their
natural axis-aligned pose, so their dots sit at the documented angles
(atan2(h, w) for the rectangle, the first cut vertex for the hexagon).

Default parameters for the composite bodies:

* ``disk_cap_regular_polygon``: unit disk intersected with a regular k-gon
  of circumradius 1.15 (vertices poke out of the disk, sides cut into it).
* ``capped_rectangle``: a generic 2-fold symmetric mixed body; a w x h
  rectangle whose two short sides are replaced by outward arcs of radius
  ``bulge_radius`` (arcs of the two disks centered at (+-e, 0) with
  e = bulge_radius - w/2).
* ``cut_corner_triangle``: equilateral triangle with its corners cut
  symmetrically at a fraction of the side length: a hexagon with 3-fold
  symmetry whose six vertices share one circumcircle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import regions
from .errors import InvalidBodyError
from .geometry import BoundaryChain
from .regions import ConstraintSpec, DiskConstraint, Halfplane, build_spec

TWO_PI = 2.0 * math.pi


@dataclass
class CatalogShape:
    name: str
    params: dict[str, float] = field(default_factory=dict)


def _require_int(params: dict, key: str, minimum: int) -> int:
    v = params[key]
    iv = int(round(v))
    if abs(v - iv) > 1e-9 or iv < minimum:
        raise InvalidBodyError(f"parameter {key} must be an integer >= "
                               f"{minimum}, got {v!r}")
    return iv


def _regular_polygon_halfplanes(n: int, circumradius: float) -> list[Halfplane]:
    apothem = circumradius * math.cos(math.pi / n)
    hs = []
    for i in range(n):
        ang = (2 * i + 1) * math.pi / n
        hs.append(Halfplane(math.cos(ang), math.sin(ang), apothem))
    return hs


def _build_disk(params) -> ConstraintSpec:
    r = params["radius"]
    if r <= 0:
        raise InvalidBodyError(f"disk radius must be positive, got {r}")
    return build_spec([], [DiskConstraint(0.0, 0.0, r)])


def _build_regular_polygon(params) -> ConstraintSpec:
    n = _require_int(params, "n", 3)
    r = params["circumradius"]
    if r <= 0:
        raise InvalidBodyError(f"circumradius must be positive, got {r}")
    return build_spec(_regular_polygon_halfplanes(n, r), [])


def _build_rectangle(params) -> ConstraintSpec:
    w, h = params["w"], params["h"]
    if w <= 0 or h <= 0:
        raise InvalidBodyError(f"rectangle sides must be positive, got {w}x{h}")
    return build_spec([Halfplane(1.0, 0.0, 0.5 * w),
                       Halfplane(-1.0, 0.0, 0.5 * w),
                       Halfplane(0.0, 1.0, 0.5 * h),
                       Halfplane(0.0, -1.0, 0.5 * h)], [])


def _build_reuleaux(params) -> ConstraintSpec:
    k = _require_int(params, "k", 3)
    if k % 2 == 0:
        raise InvalidBodyError(f"Reuleaux polygons need odd k, got {k}")
    w = params["width"]
    if w <= 0:
        raise InvalidBodyError(f"width must be positive, got {w}")
    # vertices of a regular k-gon; each disk radius equals the width
    rv = w / (2.0 * math.sin(math.pi * (k - 1) / (2.0 * k)))
    disks = [DiskConstraint(rv * math.cos(TWO_PI * i / k),
                            rv * math.sin(TWO_PI * i / k), w)
             for i in range(k)]
    return build_spec([], disks)


def _build_disk_cap_polygon(params) -> ConstraintSpec:
    k = _require_int(params, "k", 3)
    r = params["disk_radius"]
    rp = params["circumradius"]
    apothem = rp * math.cos(math.pi / k)
    if not (0 < apothem < r < rp):
        raise InvalidBodyError(
            "disk_cap_regular_polygon needs apothem < disk_radius < "
            f"circumradius (got apothem={apothem!r}, r={r!r}, R={rp!r}); "
            "otherwise one constraint family is inactive")
    return build_spec(_regular_polygon_halfplanes(k, rp),
                      [DiskConstraint(0.0, 0.0, r)])


def _build_cut_corner_triangle(params) -> ConstraintSpec:
    side = params["side"]
    cut = params["cut"]
    if side <= 0:
        raise InvalidBodyError(f"side must be positive, got {side}")
    if not 0.0 < cut < 0.5:
        raise InvalidBodyError(f"cut fraction must be in (0, 1/2), got {cut}")
    rt = side / math.sqrt(3.0)
    hs = _regular_polygon_halfplanes(3, rt)
    x_cut = rt - cut * (math.sqrt(3.0) / 2.0) * side
    for i in range(3):
        ang = TWO_PI * i / 3.0
        hs.append(Halfplane(math.cos(ang), math.sin(ang), x_cut))
    return build_spec(hs, [])


def _build_capped_rectangle(params) -> ConstraintSpec:
    w, h, r = params["w"], params["h"], params["bulge_radius"]
    if w <= 0 or h <= 0:
        raise InvalidBodyError(f"sides must be positive, got {w}x{h}")
    if r <= 0.5 * w:
        raise InvalidBodyError(
            f"bulge_radius must exceed w/2 so the arcs bulge outward "
            f"(got {r!r} <= {0.5 * w!r})")
    e = r - 0.5 * w
    if r * r - 0.25 * h * h <= e * e:
        raise InvalidBodyError(
            "capped_rectangle is degenerate: the cap arcs never reach the "
            f"horizontal sides (need bulge_radius^2 - (h/2)^2 > e^2, "
            f"e={e!r})")
    return build_spec([Halfplane(0.0, 1.0, 0.5 * h),
                       Halfplane(0.0, -1.0, 0.5 * h)],
                      [DiskConstraint(-e, 0.0, r),
                       DiskConstraint(e, 0.0, r)])


_CATALOG = {
    "disk": (_build_disk, {"radius": 1.0}),
    "regular_polygon": (_build_regular_polygon, {"n": None, "circumradius": 1.0}),
    "rectangle": (_build_rectangle, {"w": None, "h": None}),
    "reuleaux_polygon": (_build_reuleaux, {"k": None, "width": 1.0}),
    "disk_cap_regular_polygon": (_build_disk_cap_polygon,
                                 {"k": None, "disk_radius": 1.0,
                                  "circumradius": 1.15}),
    "cut_corner_triangle": (_build_cut_corner_triangle,
                            {"side": 1.0, "cut": 0.2}),
    "capped_rectangle": (_build_capped_rectangle,
                         {"w": 2.0, "h": 1.0, "bulge_radius": 2.0}),
}


def catalog_names() -> list[str]:
    return sorted(_CATALOG)


def catalog_defaults(name: str) -> dict[str, float | None]:
    if name not in _CATALOG:
        raise InvalidBodyError(f"unknown catalog shape {name!r}; available: "
                               + ", ".join(catalog_names()))
    return dict(_CATALOG[name][1])


def make_catalog(shape, params: dict | None = None
                 ) -> tuple[BoundaryChain, ConstraintSpec]:
    """Build a catalog body; returns both representations of the same body
    (the chain is extracted from the constraint spec)."""
    if isinstance(shape, CatalogShape):
        name, given = shape.name, dict(shape.params)
    else:
        name, given = shape, dict(params or {})
    if name not in _CATALOG:
        raise InvalidBodyError(f"unknown catalog shape {name!r}; available: "
                               + ", ".join(catalog_names()))
    builder, defaults = _CATALOG[name]
    merged = dict(defaults)
    for key, value in given.items():
        if key not in defaults:
            raise InvalidBodyError(
                f"unknown parameter {key!r} for {name}; expected "
                + ", ".join(sorted(defaults)))
        merged[key] = value
    missing = [k for k, v in merged.items() if v is None]
    if missing:
        raise InvalidBodyError(f"{name} needs parameters: " + ", ".join(missing))
    spec = builder(merged)
    chain = regions.extract_boundary(spec)
    return chain, spec
