import math

import numpy as np
import pytest

import cheeger2d as c2
from cheeger2d.geometry import (Arc, BoundaryChain, Point, Segment, area,
                                centroid, containment_margin,
                                distance_to_boundary, perimeter, rotate_chain,
                                scale_chain, translate_chain, validate)

from conftest import (REULEAUX_AREA, REULEAUX_PERIMETER, distinct_bodies,
                      raster_area, raster_perimeter, unit_square_spec)
from cheeger2d.oracle import rasterize


def square_chain(size=1.0, cx=0.0, cy=0.0):
    h = 0.5 * size
    pts = [Point(cx - h, cy - h), Point(cx + h, cy - h),
           Point(cx + h, cy + h), Point(cx - h, cy + h)]
    return BoundaryChain(tuple(Segment(pts[i], pts[(i + 1) % 4])
                               for i in range(4)))


def disk_chain(r=1.0, cx=0.0, cy=0.0):
    c = Point(cx, cy)
    return BoundaryChain((Arc(c, r, 0.0, math.pi),
                          Arc(c, r, math.pi, 2.0 * math.pi)))


class TestMeasures:
    def test_unit_square(self):
        ch = square_chain()
        assert area(ch) == pytest.approx(1.0, abs=1e-15)
        assert perimeter(ch) == pytest.approx(4.0, abs=1e-15)

    def test_unit_disk(self):
        ch = disk_chain()
        assert area(ch) == pytest.approx(math.pi, rel=1e-15)
        assert perimeter(ch) == pytest.approx(2.0 * math.pi, rel=1e-15)

    def test_reuleaux_triangle_closed_forms(self):
        chain, _ = c2.make_catalog("reuleaux_polygon", {"k": 3, "width": 1.0})
        assert area(chain) == pytest.approx(REULEAUX_AREA, abs=1e-12)
        assert perimeter(chain) == pytest.approx(REULEAUX_PERIMETER, abs=1e-12)

    def test_reuleaux_area_against_grid(self):
        _, spec = c2.make_catalog("reuleaux_polygon", {"k": 3, "width": 1.0})
        assert raster_area(spec, 4096) == pytest.approx(REULEAUX_AREA, abs=1e-3)

    def test_reuleaux_perimeter_against_grid(self):
        _, spec = c2.make_catalog("reuleaux_polygon", {"k": 3, "width": 1.0})
        est = raster_perimeter(rasterize(spec, 4096))
        assert est == pytest.approx(REULEAUX_PERIMETER, abs=1e-2)


class TestCentroid:
    def test_square_at_origin(self):
        c = centroid(square_chain())
        assert abs(c.x) < 1e-15 and abs(c.y) < 1e-15

    def test_disk_off_origin(self):
        c = centroid(disk_chain(1.0, 2.0, 3.0))
        assert c.x == pytest.approx(2.0, abs=1e-12)
        assert c.y == pytest.approx(3.0, abs=1e-12)

    def test_triangle_vertex_average(self):
        spec = c2.spec_from_polygon([Point(0, 0), Point(1, 0), Point(0, 1)])
        c = centroid(c2.extract_boundary(spec))
        assert c.x == pytest.approx(1.0 / 3.0, abs=1e-12)
        assert c.y == pytest.approx(1.0 / 3.0, abs=1e-12)

    def test_half_disk(self):
        # area centroid of a half disk sits at 4r/(3 pi) from the center
        spec = c2.build_spec([c2.Halfplane(0.0, -1.0, 0.0)],
                             [c2.DiskConstraint(0.0, 0.0, 1.0)])
        c = centroid(c2.extract_boundary(spec))
        assert c.x == pytest.approx(0.0, abs=1e-12)
        assert c.y == pytest.approx(4.0 / (3.0 * math.pi), abs=1e-12)


class TestDistance:
    def test_square_center(self):
        assert distance_to_boundary(square_chain(), Point(0, 0)) == \
            pytest.approx(0.5, abs=1e-15)

    def test_disk_interior_point(self):
        assert distance_to_boundary(disk_chain(), Point(0.3, 0.0)) == \
            pytest.approx(0.7, abs=1e-15)

    def test_point_on_side(self):
        assert distance_to_boundary(square_chain(), Point(0.5, 0.1)) == \
            pytest.approx(0.0, abs=1e-15)

    def test_outside_point(self):
        assert distance_to_boundary(square_chain(), Point(1.5, 0.0)) == \
            pytest.approx(1.0, abs=1e-15)


class TestValidate:
    def test_square_valid(self):
        assert validate(square_chain()).ok

    def test_reflex_vertex_flagged(self):
        pts = [Point(-0.5, -0.5), Point(0.5, -0.5), Point(0.0, 0.0),
               Point(0.5, 0.5), Point(-0.5, 0.5)]
        ch = BoundaryChain(tuple(Segment(pts[i], pts[(i + 1) % 5])
                                 for i in range(5)))
        diag = validate(ch)
        assert not diag.ok
        assert any(i == 2 for i, _ in diag.reflex_junctions)
        assert "reflex" in diag.summary()

    def test_closure_gap_flagged(self):
        pts = [Point(-0.5, -0.5), Point(0.5, -0.5), Point(0.5, 0.5),
               Point(-0.5, 0.5)]
        pieces = [Segment(pts[i], pts[(i + 1) % 4]) for i in range(4)]
        pieces[3] = Segment(pts[3], Point(-0.5, -0.5 + 1e-3))
        diag = validate(BoundaryChain(tuple(pieces)))
        assert not diag.ok
        assert diag.closure_gaps and diag.closure_gaps[0][1] == \
            pytest.approx(1e-3, rel=1e-6)

    def test_clockwise_rejected(self):
        pts = [Point(-0.5, -0.5), Point(-0.5, 0.5), Point(0.5, 0.5),
               Point(0.5, -0.5)]
        ch = BoundaryChain(tuple(Segment(pts[i], pts[(i + 1) % 4])
                                 for i in range(4)))
        assert not validate(ch).orientation_ok


class TestInvariants:
    def test_rigid_motion_invariance(self):
        rng = np.random.RandomState(7)
        for label, chain, _spec in distinct_bodies()[:6]:
            a0, p0 = area(chain), perimeter(chain)
            for _ in range(3):
                ang = rng.uniform(0, 2 * math.pi)
                dx, dy = rng.uniform(-3, 3, size=2)
                moved = translate_chain(rotate_chain(chain, ang), dx, dy)
                assert area(moved) == pytest.approx(a0, rel=1e-12), label
                assert perimeter(moved) == pytest.approx(p0, rel=1e-12), label

    def test_scaling(self):
        chain, _ = c2.make_catalog("reuleaux_polygon", {"k": 5, "width": 1.0})
        for lam in (0.5, 2.0, 3.7):
            scaled = scale_chain(chain, lam)
            assert area(scaled) == pytest.approx(lam ** 2 * area(chain),
                                                 rel=1e-12)
            assert perimeter(scaled) == pytest.approx(lam * perimeter(chain),
                                                      rel=1e-12)

    def test_isoperimetric_inequality(self):
        for label, chain, _spec in distinct_bodies():
            p, a = perimeter(chain), area(chain)
            assert p * p >= 4.0 * math.pi * a - 1e-9, label
            if label == "disk":
                assert p * p == pytest.approx(4.0 * math.pi * a, abs=1e-9)
            else:
                assert p * p > 4.0 * math.pi * a * (1.0 + 1e-6), label

    def test_catalog_matches_grid_estimates(self):
        for label, chain, spec in distinct_bodies():
            raster = rasterize(spec, 1024)
            a_est = raster.cell ** 2 * int(raster.inside.sum())
            assert a_est == pytest.approx(area(chain), rel=0.01), label
            assert raster_perimeter(raster) == pytest.approx(
                perimeter(chain), rel=0.01), label


class TestContainmentMargin:
    def test_inside_and_outside(self):
        ch = square_chain()
        assert containment_margin(ch, Point(0, 0)) == pytest.approx(-0.5)
        assert containment_margin(ch, Point(0.6, 0.0)) == pytest.approx(0.1)

    def test_matches_constraint_test(self):
        chain, spec = c2.make_catalog("disk_cap_regular_polygon", {"k": 3})
        rng = np.random.RandomState(3)
        for _ in range(200):
            pt = Point(rng.uniform(-1.3, 1.3), rng.uniform(-1.3, 1.3))
            inside_margin = containment_margin(chain, pt) <= 1e-12
            inside_spec = c2.contains(spec, pt, 1e-12)
            assert inside_margin == inside_spec


class TestCatalogConsistency:
    def test_chain_and_spec_agree(self):
        # both representations carry the same body
        for label, chain, spec in distinct_bodies():
            again = c2.extract_boundary(spec)
            assert area(again) == pytest.approx(area(chain), rel=1e-12), label

    def test_square_from_catalog(self):
        chain, _ = c2.make_catalog("regular_polygon",
                                   {"n": 4, "circumradius": math.sqrt(2) / 2})
        assert area(chain) == pytest.approx(1.0, rel=1e-12)
        assert perimeter(chain) == pytest.approx(4.0, rel=1e-12)

    def test_disk_cap_area_is_smaller_than_parts(self):
        chain, spec = c2.make_catalog("disk_cap_regular_polygon", {"k": 3})
        tri_area = 3.0 * math.sqrt(3.0) / 4.0 * 1.15 ** 2
        assert area(chain) < min(math.pi, tri_area)
        assert len(spec.halfplanes) == 3 and len(spec.disks) == 1

    def test_cut_corner_triangle_is_hexagon(self):
        chain, _ = c2.make_catalog("cut_corner_triangle",
                                   {"side": 1.0, "cut": 0.2})
        assert len(chain.pieces) == 6
        assert chain.is_polygon()
        assert area(chain) == pytest.approx(
            math.sqrt(3.0) / 4.0 * (1.0 - 3 * 0.2 ** 2), rel=1e-12)

    def test_bad_params_rejected(self):
        with pytest.raises(c2.InvalidBodyError):
            c2.make_catalog("reuleaux_polygon", {"k": 4})
        with pytest.raises(c2.InvalidBodyError):
            c2.make_catalog("cut_corner_triangle", {"cut": 0.6})
        with pytest.raises(c2.InvalidBodyError):
            c2.make_catalog("regular_polygon", {"n": 2, "circumradius": 1.0})
        with pytest.raises(c2.InvalidBodyError):
            c2.make_catalog("no_such_shape", {})

    def test_axis_square_spec_helper(self):
        chain = c2.extract_boundary(unit_square_spec())
        assert area(chain) == pytest.approx(1.0, abs=1e-15)
