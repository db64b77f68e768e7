"""JSON surface: body inputs, result/report outputs.

Serialization is deterministic: fixed field order (insertion order of the
dicts built here) and floats rendered with 17 significant digits, which
round-trips doubles exactly.
"""

from __future__ import annotations

import json
import math

from . import regions
from .catalog import make_catalog
from .errors import InvalidBodyError
from .geometry import Arc, BoundaryChain, Point, Segment
from .regions import ConstraintSpec, DiskConstraint, Halfplane


def format_float(x: float) -> str:
    if not math.isfinite(x):
        raise InvalidBodyError(f"cannot serialize non-finite float {x!r}")
    s = f"{x:.17g}"
    return s


def dumps(obj) -> str:
    """Deterministic JSON text (17 significant digits for floats)."""
    out: list[str] = []
    _emit(obj, out)
    return "".join(out)


def _emit(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (k, v) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(k)))
            out.append(":")
            _emit(v, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, v in enumerate(obj):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


# ---------------------------------------------------------------------------
# body input
# ---------------------------------------------------------------------------

def parse_body(data) -> tuple[BoundaryChain, ConstraintSpec]:
    """Parse a body JSON object (already loaded) into both representations.

    Accepted kinds: ``polygon`` (CCW convex vertices), ``constraints``
    (halfplanes with unit normals plus disks), ``catalog`` (name + params).
    """
    if not isinstance(data, dict) or "kind" not in data:
        raise InvalidBodyError('body JSON must be an object with a "kind" key')
    kind = data["kind"]
    if kind == "polygon":
        try:
            vertices = [Point(float(x), float(y)) for x, y in data["vertices"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidBodyError(f"bad polygon vertices: {exc}") from exc
        spec = regions.spec_from_polygon(vertices)
        return regions.extract_boundary(spec), spec
    if kind == "constraints":
        try:
            hs = [Halfplane(float(h["normal"][0]), float(h["normal"][1]),
                            float(h["offset"]))
                  for h in data.get("halfplanes", [])]
            ds = [DiskConstraint(float(d["center"][0]), float(d["center"][1]),
                                 float(d["radius"]))
                  for d in data.get("disks", [])]
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise InvalidBodyError(f"bad constraints object: {exc}") from exc
        spec = regions.build_spec(hs, ds)
        return regions.extract_boundary(spec), spec
    if kind == "catalog":
        name = data.get("name")
        params = data.get("params", {})
        if not isinstance(name, str) or not isinstance(params, dict):
            raise InvalidBodyError('catalog body needs "name" and "params"')
        return make_catalog(name, {k: float(v) for k, v in params.items()})
    raise InvalidBodyError(f"unknown body kind {kind!r}; expected polygon, "
                           "constraints or catalog")


def load_body(path: str) -> tuple[BoundaryChain, ConstraintSpec]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InvalidBodyError(f"cannot read body file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InvalidBodyError(f"invalid JSON in {path!r}: {exc}") from exc
    return parse_body(data)


def spec_to_json(spec: ConstraintSpec) -> dict:
    return {
        "kind": "constraints",
        "halfplanes": [{"normal": [h.nx, h.ny], "offset": h.c}
                       for h in spec.halfplanes],
        "disks": [{"center": [d.cx, d.cy], "radius": d.r}
                  for d in spec.disks],
    }


# ---------------------------------------------------------------------------
# result / report output
# ---------------------------------------------------------------------------

def piece_to_json(piece) -> dict:
    if isinstance(piece, Segment):
        return {"type": "segment",
                "start": [piece.start.x, piece.start.y],
                "end": [piece.end.x, piece.end.y]}
    return {"type": "arc",
            "center": [piece.center.x, piece.center.y],
            "radius": piece.radius,
            "start_angle": piece.start_angle,
            "end_angle": piece.end_angle}


def chain_to_json(chain: BoundaryChain) -> list[dict]:
    return [piece_to_json(p) for p in chain.pieces]


def piece_from_json(data: dict):
    try:
        if data["type"] == "segment":
            return Segment(Point(*map(float, data["start"])),
                           Point(*map(float, data["end"])))
        if data["type"] == "arc":
            return Arc(Point(*map(float, data["center"])),
                       float(data["radius"]), float(data["start_angle"]),
                       float(data["end_angle"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidBodyError(f"bad piece object: {exc}") from exc
    raise InvalidBodyError(f"unknown piece type {data.get('type')!r}")


def result_to_json(result, omega_area: float, cheeger_area: float,
                   cheeger_perimeter: float) -> dict:
    return {
        "s": result.s,
        "h": result.h,
        "area_omega": omega_area,
        "cheeger": {
            "area": cheeger_area,
            "perimeter": cheeger_perimeter,
            "boundary": chain_to_json(result.cheeger_set),
        },
        "contacts": [{"piece": c.piece, "kind": c.kind}
                     for c in result.contacts],
    }


def report_to_json(sym, de, report) -> dict:
    k = len(de.dots)
    return {
        "k": sym.k,
        "center": [sym.center.x, sym.center.y],
        "circumradius": de.circumradius,
        "dots": [[d.x, d.y] for d in de.dots],
        "edges": [{"from": i, "to": (i + 1) % k} for i in range(k)],
        "edge_contacts": [
            {"edge": c.edge, "touched": c.touched,
             "witness": None if c.witness is None else [c.witness.x, c.witness.y]}
            for c in report.edge_contacts],
        "cheeger_regular": report.cheeger_regular,
        "rotation_gap": report.rotation_inheritance_gap,
    }


def oracle_to_json(h_exact: float, h_oracle: float, n: int) -> dict:
    rel = abs(h_oracle - h_exact) / abs(h_exact)
    return {"h_exact": h_exact, "h_oracle": h_oracle, "rel_err": rel, "n": n}
