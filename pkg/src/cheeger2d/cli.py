"""Command-line interface.

Commands: solve | symmetry | oracle | render | catalog.
Exit codes: 0 success, 1 invalid input, 2 numeric failure, 3 symmetry
rejected.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import jsonio, solver, svg, symmetry
from .catalog import catalog_defaults, catalog_names, make_catalog
from .errors import (CheegerError, DegenerateBodyError, InvalidBodyError,
                     NumericFailureError, OracleFailureError)
from .geometry import area, perimeter

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NUMERIC = 2
EXIT_SYMMETRY = 3


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str | None = None
    catalog: str | None = None
    params: dict | None = None
    root_tol: float | None = None
    contact_tol: float | None = None
    sym_tol: float | None = None
    grid: int = 1024
    k: int | None = None
    json_path: str | None = None
    svg_path: str | None = None

    def __post_init__(self):
        for name in ("root_tol", "contact_tol", "sym_tol"):
            value = getattr(self, name)
            if value is not None and value <= 0.0:
                raise InvalidBodyError(f"--{name.replace('_', '-')} must be "
                                       f"positive, got {value}")

    def load_body(self):
        has_file = self.input_path is not None
        has_cat = self.catalog is not None
        if self.command == "catalog":
            if has_file:
                raise InvalidBodyError("catalog takes no --input")
        elif has_file == has_cat:
            raise InvalidBodyError(
                "exactly one of --input or --catalog is required")
        if has_file:
            if self.params:
                raise InvalidBodyError("--param only applies to --catalog")
            return jsonio.load_body(self.input_path)
        return make_catalog(self.catalog, self.params or {})

    def solver_config(self) -> solver.SolverConfig:
        if self.root_tol is not None:
            return solver.SolverConfig(root_tol=self.root_tol)
        return solver.SolverConfig()


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="cheeger2d", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", help="body JSON file")
        p.add_argument("--catalog", help="catalog shape name")
        p.add_argument("--param", action="append", default=[],
                       metavar="KEY=VALUE", help="catalog parameter")

    def add_tols(p, contact=False):
        p.add_argument("--tol", type=float, default=None,
                       help="root tolerance (absolute in s)")
        if contact:
            p.add_argument("--contact-tol", type=float, default=None,
                           help="edge-contact tolerance (absolute)")
            p.add_argument("--sym-tol", type=float, default=None,
                           help="symmetry acceptance tolerance (absolute)")

    p = sub.add_parser("solve", help="Cheeger constant and Cheeger set")
    add_input(p)
    add_tols(p)
    p.add_argument("--json", dest="json_path", help="output JSON path")
    p.add_argument("--svg", dest="svg_path", help="optional figure output")

    p = sub.add_parser("symmetry", help="symmetry, dots/edges, contact report")
    add_input(p)
    add_tols(p, contact=True)
    p.add_argument("--k", type=int, required=True, help="symmetry order")
    p.add_argument("--json", dest="json_path")
    p.add_argument("--svg", dest="svg_path")

    p = sub.add_parser("oracle", help="grid verification of the constant")
    add_input(p)
    add_tols(p)
    p.add_argument("--grid", type=int, default=1024, help="grid resolution")
    p.add_argument("--json", dest="json_path")

    p = sub.add_parser("render", help="SVG figure of a solved body")
    add_input(p)
    add_tols(p, contact=True)
    p.add_argument("--k", type=int, default=None,
                   help="add dots/witness layers for this symmetry order")
    p.add_argument("--json", dest="json_path")
    p.add_argument("--svg", dest="svg_path", required=True,
                   help="figure output path")

    p = sub.add_parser("catalog", help="list shapes or emit a body JSON")
    p.add_argument("--catalog", help="catalog shape name")
    p.add_argument("--param", action="append", default=[],
                   metavar="KEY=VALUE")
    p.add_argument("--json", dest="json_path")
    return parser


def _parse_params(items) -> dict[str, float]:
    params = {}
    for item in items:
        if "=" not in item:
            raise InvalidBodyError(f"--param expects KEY=VALUE, got {item!r}")
        key, _, value = item.partition("=")
        try:
            params[key.strip()] = float(value)
        except ValueError as exc:
            raise InvalidBodyError(f"--param {key}: bad number {value!r}") from exc
    return params


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        command=args.command,
        input_path=getattr(args, "input", None),
        catalog=getattr(args, "catalog", None),
        params=_parse_params(getattr(args, "param", [])),
        root_tol=getattr(args, "tol", None),
        contact_tol=getattr(args, "contact_tol", None),
        sym_tol=getattr(args, "sym_tol", None),
        grid=getattr(args, "grid", 1024),
        k=getattr(args, "k", None),
        json_path=getattr(args, "json_path", None),
        svg_path=getattr(args, "svg_path", None),
    )


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text + "\n")
    else:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            raise InvalidBodyError(f"cannot write {path!r}: {exc}") from exc


def _result_json_text(result, omega) -> str:
    data = jsonio.result_to_json(result, area(omega),
                                 area(result.cheeger_set),
                                 perimeter(result.cheeger_set))
    return jsonio.dumps(data)


def cmd_solve(cfg: RunConfig) -> int:
    omega, spec = cfg.load_body()
    result = solver.solve_cheeger(spec, cfg.solver_config())
    _write(_result_json_text(result, omega), cfg.json_path)
    if cfg.svg_path:
        _write(svg.render_svg(omega, result.inner_set, result.cheeger_set)
               .rstrip("\n"), cfg.svg_path)
    return EXIT_OK


def _symmetry_pipeline(cfg: RunConfig, omega, spec):
    sym = symmetry.detect_symmetry(omega, cfg.k, tol=cfg.sym_tol)
    if isinstance(sym, symmetry.SymmetryRejection):
        return sym, None, None, None
    de = symmetry.dots_and_edges(omega, sym)
    result = solver.solve_cheeger(spec, cfg.solver_config())
    report = symmetry.check_edge_contacts(de, result.cheeger_set,
                                          tol=cfg.contact_tol)
    gap = symmetry.check_rotation_inheritance(result.cheeger_set, sym)
    return sym, de, result, report.with_gap(gap)


def cmd_symmetry(cfg: RunConfig) -> int:
    if cfg.k is None or cfg.k < 2:
        raise InvalidBodyError(f"--k must be >= 2, got {cfg.k}")
    omega, spec = cfg.load_body()
    sym, de, result, report = _symmetry_pipeline(cfg, omega, spec)
    if isinstance(sym, symmetry.SymmetryRejection):
        sys.stderr.write(
            f"symmetry rejected: k={cfg.k} residual {sym.residual:.6g} "
            f"exceeds tolerance {sym.tol:.6g}\n")
        return EXIT_SYMMETRY
    _write(jsonio.dumps(jsonio.report_to_json(sym, de, report)),
           cfg.json_path)
    if cfg.svg_path:
        witnesses = tuple(c.witness for c in report.edge_contacts
                          if c.witness is not None)
        _write(svg.render_svg(omega, result.inner_set, result.cheeger_set,
                              dots=de.dots, witnesses=witnesses).rstrip("\n"),
               cfg.svg_path)
    return EXIT_OK


def cmd_oracle(cfg: RunConfig) -> int:
    from . import oracle as oracle_mod
    omega, spec = cfg.load_body()
    h_exact = solver.cheeger_constant(spec, cfg.solver_config())
    _, h_oracle = oracle_mod.oracle_cheeger(spec, cfg.grid)
    data = jsonio.oracle_to_json(h_exact, h_oracle, cfg.grid)
    _write(jsonio.dumps(data), cfg.json_path)
    if data["rel_err"] <= 0.02 and cfg.grid >= 1024:
        return EXIT_OK
    sys.stderr.write(
        f"oracle check not conclusive: rel_err {data['rel_err']:.4g} at "
        f"n={cfg.grid} (need <= 0.02 at n >= 1024)\n")
    return EXIT_NUMERIC


def cmd_render(cfg: RunConfig) -> int:
    omega, spec = cfg.load_body()
    if cfg.k is not None:
        sym, de, result, report = _symmetry_pipeline(cfg, omega, spec)
        if isinstance(sym, symmetry.SymmetryRejection):
            sys.stderr.write(
                f"symmetry rejected: k={cfg.k} residual {sym.residual:.6g}\n")
            return EXIT_SYMMETRY
        witnesses = tuple(c.witness for c in report.edge_contacts
                          if c.witness is not None)
        text = svg.render_svg(omega, result.inner_set, result.cheeger_set,
                              dots=de.dots, witnesses=witnesses)
    else:
        result = solver.solve_cheeger(spec, cfg.solver_config())
        text = svg.render_svg(omega, result.inner_set, result.cheeger_set)
    _write(text.rstrip("\n"), cfg.svg_path)
    if cfg.json_path:
        _write(_result_json_text(result, omega), cfg.json_path)
    return EXIT_OK


def cmd_catalog(cfg: RunConfig) -> int:
    if cfg.catalog is None:
        listing = {"shapes": [{"name": n, "params": catalog_defaults(n)}
                              for n in catalog_names()]}
        _write(jsonio.dumps(listing), cfg.json_path)
        return EXIT_OK
    _, spec = make_catalog(cfg.catalog, cfg.params or {})
    _write(jsonio.dumps(jsonio.spec_to_json(spec)), cfg.json_path)
    return EXIT_OK


_COMMANDS = {
    "solve": cmd_solve,
    "symmetry": cmd_symmetry,
    "oracle": cmd_oracle,
    "render": cmd_render,
    "catalog": cmd_catalog,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INVALID
    try:
        cfg = _config_from_args(args)
        return _COMMANDS[cfg.command](cfg)
    except InvalidBodyError as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INVALID
    except (NumericFailureError, DegenerateBodyError,
            OracleFailureError) as exc:
        sys.stderr.write(f"numeric failure: {exc}\n")
        return EXIT_NUMERIC
    except CheegerError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NUMERIC


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
