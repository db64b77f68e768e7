import json
import math

import pytest

import cheeger2d as c2
from cheeger2d import jsonio
from cheeger2d.cli import main

from conftest import SQUARE_H

SQUARE_ARGS = ["--catalog", "regular_polygon", "--param", "n=4",
               "--param", "circumradius=0.7071067811865476"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSolve:
    def test_disk(self, capsys):
        code, out, _ = run(capsys, "solve", "--catalog", "disk")
        assert code == 0
        data = json.loads(out)
        assert data["h"] == pytest.approx(2.0, abs=1e-9)
        assert data["area_omega"] == pytest.approx(math.pi, rel=1e-12)
        assert {c["kind"] for c in data["contacts"]} == {"boundary"}

    def test_square_via_params(self, capsys):
        code, out, _ = run(capsys, "solve", *SQUARE_ARGS)
        assert code == 0
        assert json.loads(out)["h"] == pytest.approx(SQUARE_H, abs=1e-9)

    def test_nonconvex_input_rejected(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps(
            {"kind": "polygon",
             "vertices": [[-0.5, -0.5], [0.5, -0.5], [0.0, 0.0],
                          [0.5, 0.5], [-0.5, 0.5]]}))
        code, _, err = run(capsys, "solve", "--input", str(bad))
        assert code == 1
        assert "reflex vertex 2" in err

    def test_missing_input(self, capsys):
        code, _, err = run(capsys, "solve")
        assert code == 1 and "exactly one" in err

    def test_both_inputs(self, capsys, tmp_path):
        p = tmp_path / "b.json"
        p.write_text("{}")
        code, _, _ = run(capsys, "solve", "--input", str(p),
                         "--catalog", "disk")
        assert code == 1

    def test_deterministic_output(self, capsys):
        _, out1, _ = run(capsys, "solve", *SQUARE_ARGS)
        _, out2, _ = run(capsys, "solve", *SQUARE_ARGS)
        assert out1 == out2

    def test_result_json_reparses(self, capsys):
        code, out, _ = run(capsys, "solve", "--catalog", "reuleaux_polygon",
                           "--param", "k=3")
        data = json.loads(out)
        pieces = [jsonio.piece_from_json(p)
                  for p in data["cheeger"]["boundary"]]
        assert len(pieces) == len(data["contacts"])


class TestSymmetry:
    def test_reuleaux_pentagon(self, capsys):
        code, out, _ = run(capsys, "symmetry", "--catalog", "reuleaux_polygon",
                           "--param", "k=5", "--k", "5")
        assert code == 0
        data = json.loads(out)
        assert data["cheeger_regular"] is True
        assert len(data["dots"]) == 5
        assert data["rotation_gap"] <= 1e-9

    def test_rectangle_two_dots(self, capsys):
        code, out, _ = run(capsys, "symmetry", "--catalog", "rectangle",
                           "--param", "w=2", "--param", "h=1", "--k", "2")
        assert code == 0
        data = json.loads(out)
        assert data["cheeger_regular"] is True
        dots = data["dots"]
        assert len(dots) == 2
        assert dots[0] == pytest.approx([1.0, 0.5], abs=1e-9)
        assert dots[1] == pytest.approx([-1.0, -0.5], abs=1e-9)

    def test_square_threefold_rejected(self, capsys):
        code, _, err = run(capsys, "symmetry", *SQUARE_ARGS, "--k", "3")
        assert code == 3
        assert "residual" in err


class TestOracleCmd:
    def test_square_1024(self, capsys):
        code, out, _ = run(capsys, "oracle", *SQUARE_ARGS, "--grid", "1024")
        assert code == 0
        data = json.loads(out)
        assert data["rel_err"] <= 0.02
        assert data["n"] == 1024

    def test_coarse_grid_nonzero_exit(self, capsys):
        code, out, err = run(capsys, "oracle", *SQUARE_ARGS, "--grid", "64")
        assert code != 0
        assert "not conclusive" in err


class TestRenderCmd:
    def test_disk_render(self, capsys, tmp_path):
        svg_path = tmp_path / "disk.svg"
        code, _, _ = run(capsys, "render", "--catalog", "disk",
                         "--svg", str(svg_path))
        assert code == 0
        text = svg_path.read_text()
        assert 'id="omega"' in text and 'id="cheeger"' in text

    def test_square_with_symmetry_layers(self, capsys, tmp_path):
        svg_path = tmp_path / "sq.svg"
        code, _, _ = run(capsys, "render", *SQUARE_ARGS, "--k", "4",
                         "--svg", str(svg_path))
        assert code == 0
        text = svg_path.read_text()
        assert 'id="dots"' in text and 'id="witnesses"' in text

    def test_unwritable_path(self, capsys):
        code, _, err = run(capsys, "render", "--catalog", "disk",
                           "--svg", "/no/such/dir/out.svg")
        assert code == 1


class TestCatalogCmd:
    def test_listing(self, capsys):
        code, out, _ = run(capsys, "catalog")
        assert code == 0
        names = {s["name"] for s in json.loads(out)["shapes"]}
        assert {"disk", "regular_polygon", "rectangle", "reuleaux_polygon",
                "disk_cap_regular_polygon", "cut_corner_triangle"} <= names

    def test_emit_body(self, capsys):
        code, out, _ = run(capsys, "catalog", "--catalog", "reuleaux_polygon",
                           "--param", "k=3")
        assert code == 0
        chain, _ = jsonio.parse_body(json.loads(out))
        assert c2.area(chain) == pytest.approx(
            0.5 * (math.pi - math.sqrt(3.0)), rel=1e-12)

    def test_unknown_shape(self, capsys):
        code, _, err = run(capsys, "catalog", "--catalog", "pentagon!!")
        assert code == 1


class TestUsageErrors:
    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1

    def test_bad_param_syntax(self, capsys):
        code, _, err = run(capsys, "solve", "--catalog", "disk",
                           "--param", "radius:1")
        assert code == 1 and "KEY=VALUE" in err

    def test_bad_tol(self, capsys):
        code, _, _ = run(capsys, "solve", "--catalog", "disk",
                         "--tol", "-1")
        assert code == 1
