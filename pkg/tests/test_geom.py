import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from lighthouse.errors import DegenerateInput, NoTangents, PointInsideCircle
from lighthouse.geom import (
    Circle,
    Point,
    Ray,
    common_tangents,
    line_distance,
    ray_line_intersection,
    reflect,
    segment_hits_disk,
    tangent_length,
    tangent_points,
)

UNIT = Circle(Point(0.0, 0.0), 1.0)

coord = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
radius = st.floats(0.1, 5.0)


def close(p, q, tol=1e-10):
    return abs(p.x - q.x) <= tol and abs(p.y - q.y) <= tol


class TestTangentLength:
    def test_distance_two(self):
        assert tangent_length(Point(2.0, 0.0), UNIT) == pytest.approx(math.sqrt(3), abs=1e-12)

    def test_three_root_three(self):
        p = Point(3 * math.sqrt(3), 0.0)
        assert tangent_length(p, UNIT) == pytest.approx(math.sqrt(26), abs=1e-12)
        assert tangent_length(p, UNIT) == pytest.approx(5.0990195, abs=1e-7)

    def test_on_circle(self):
        assert tangent_length(Point(0.0, 1.0), UNIT) == 0.0

    def test_inside(self):
        with pytest.raises(PointInsideCircle):
            tangent_length(Point(0.1, 0.2), UNIT)

    @given(coord, coord, coord, coord, radius)
    def test_pythagoras(self, px, py, cx, cy, r):
        c = Circle(Point(cx, cy), r)
        d = math.hypot(px - cx, py - cy)
        assume(d >= r)
        tl = tangent_length(Point(px, py), c)
        assert tl * tl + r * r == pytest.approx(d * d, rel=1e-9)


class TestTangentPoints:
    def test_from_two(self):
        pts = tangent_points(Point(2.0, 0.0), UNIT)
        assert len(pts) == 2
        want = {(0.5, math.sqrt(3) / 2), (0.5, -math.sqrt(3) / 2)}
        got = {(round(p.x, 12), round(p.y, 12)) for p in pts}
        assert got == {(round(a, 12), round(b, 12)) for a, b in want}

    def test_on_circle_single(self):
        pts = tangent_points(Point(1.0, 0.0), UNIT)
        assert len(pts) == 1 and close(pts[0], Point(1.0, 0.0))

    def test_inside(self):
        with pytest.raises(PointInsideCircle):
            tangent_points(Point(0.0, 0.0), UNIT)

    @given(coord, coord, coord, coord, radius)
    def test_touch_and_perpendicular(self, px, py, cx, cy, r):
        p, c = Point(px, py), Circle(Point(cx, cy), r)
        assume((p - c.center).norm() > r + 1e-6)
        for t in tangent_points(p, c):
            assert abs((t - c.center).norm() - r) <= 1e-10
            # scale-free perpendicularity
            cos = (t - p).dot(t - c.center) / ((t - p).norm() * r)
            assert abs(cos) <= 1e-9

    @given(coord, coord, coord, coord, radius)
    def test_mirror_pair(self, px, py, cx, cy, r):
        p, c = Point(px, py), Circle(Point(cx, cy), r)
        assume((p - c.center).norm() > r + 1e-6)
        a, b = tangent_points(p, c)
        assert close(reflect(a, p, c.center - p), b, tol=1e-9)


class TestCommonTangents:
    def test_four_apart(self):
        c1, c2 = UNIT, Circle(Point(4.0, 0.0), 1.0)
        lines = common_tangents(c1, c2)
        assert len(lines) == 4
        parallel = [t1 for t1, _ in lines if abs(t1.line_dir.y) < 1e-12]
        assert len(parallel) == 2

    def test_touching_circles(self):
        assert len(common_tangents(UNIT, Circle(Point(2.0, 0.0), 1.0))) == 3

    def test_nested(self):
        with pytest.raises(NoTangents):
            common_tangents(UNIT, Circle(Point(0.0, 0.0), 3.0))

    def test_identical(self):
        with pytest.raises(DegenerateInput):
            common_tangents(UNIT, Circle(Point(0.0, 0.0), 1.0))

    @given(coord, coord, radius, coord, coord, radius)
    def test_tangent_to_both(self, ax, ay, ar, bx, by, br):
        c1, c2 = Circle(Point(ax, ay), ar), Circle(Point(bx, by), br)
        d = (c2.center - c1.center).norm()
        assume(d > abs(ar - br) + 1e-6)
        for t1, t2 in common_tangents(c1, c2):
            assert abs(line_distance(c1.center, t1.line_point, t1.line_dir) - ar) <= 1e-10 * max(1.0, d)
            assert abs(line_distance(c2.center, t1.line_point, t1.line_dir) - br) <= 1e-10 * max(1.0, d)
            assert abs(line_distance(t2.line_point, t1.line_point, t1.line_dir)) <= 1e-10 * max(1.0, d)


class TestSegmentHitsDisk:
    def test_through_center(self):
        assert segment_hits_disk(Point(-3, 0), Point(3, 0), UNIT, 1e-9)

    def test_grazing_is_clear(self):
        assert not segment_hits_disk(Point(-3, 1), Point(3, 1), UNIT, 1e-9)

    def test_miss(self):
        assert not segment_hits_disk(Point(-3, 2), Point(3, 2), UNIT)

    @given(coord, coord, coord, coord)
    def test_symmetric(self, ax, ay, bx, by):
        a, b = Point(ax, ay), Point(bx, by)
        assert segment_hits_disk(a, b, UNIT) == segment_hits_disk(b, a, UNIT)


class TestRayLine:
    def test_hits_vertical(self):
        ray = Ray(Point(0, 0), Point(1, 0))
        assert close(ray_line_intersection(ray, Point(5, 0), Point(0, 1)), Point(5, 0), 1e-12)

    def test_parallel(self):
        assert ray_line_intersection(Ray(Point(0, 0), Point(1, 0)), Point(0, 1), Point(1, 0)) is None

    def test_behind(self):
        assert ray_line_intersection(Ray(Point(0, 0), Point(-1, 0)), Point(5, 0), Point(0, 1)) is None


def test_point_rejects_nan():
    with pytest.raises(ValueError):
        Point(float("nan"), 0.0)


def test_circle_rejects_bad_radius():
    with pytest.raises(ValueError):
        Circle(Point(0, 0), 0.0)
