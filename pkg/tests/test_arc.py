import math

import pytest

from lighthouse import arc, center
from lighthouse.errors import IndexOutOfRange, NoRootInBracket, UnsupportedN
from lighthouse.geom import Point, line_distance
from lighthouse.scene import Darkness, RayFamily, TangentSolution, build_scene


def _pt_close(p, q, tol=1e-12):
    return abs(p.x - q.x) <= tol and abs(p.y - q.y) <= tol


class TestIlluminatedArc:
    def test_n4_endpoints(self):
        span = arc.illuminated_arc(build_scene(4), 0)
        want = {(4 + math.cos(math.pi + s * math.pi / 4), math.sin(math.pi + s * math.pi / 4)) for s in (1, -1)}
        got = {(round(p.x, 12), round(p.y, 12)) for p in (span.endpoint_a, span.endpoint_b)}
        assert got == {(round(x, 12), round(y, 12)) for x, y in want}

    def test_n1_full(self):
        assert arc.illuminated_arc(build_scene(1), 0).full_circle

    def test_n2_half_circle(self):
        span = arc.illuminated_arc(build_scene(2), 0)
        assert span.half_width == pytest.approx(math.pi / 2)
        got = {(round(p.x, 12), round(p.y, 12)) for p in (span.endpoint_a, span.endpoint_b)}
        assert got == {(2.0, 1.0), (2.0, -1.0)}

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRange):
            arc.illuminated_arc(build_scene(3), 3)

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_faces_placement_center(self, n):
        s = build_scene(n)
        for i in range(n):
            span = arc.illuminated_arc(s, i)
            c = s.centers[i]
            for p in (span.endpoint_a, span.endpoint_b):
                assert abs((p - c).norm() - 1.0) <= 1e-12
            mid = c + Point.polar(1.0, span.center_angle)
            nearest = c * (1 - 1 / n)
            assert _pt_close(mid, nearest, 1e-12)


class TestCandidates:
    def test_n2_empty(self):
        assert arc.candidate_rays(build_scene(2), 1) == []

    def test_n4_best(self):
        s = build_scene(4)
        best = min((c for c in arc.candidate_rays(s, 1) if arc.is_admissible(s, c)), key=lambda c: c.x)
        assert best.x == pytest.approx(1.5637, abs=5e-4)

    def test_n20_closest_blocked(self):
        s = build_scene(20)
        cands = arc.candidate_rays(s, 1)
        assert cands and not any(arc.is_admissible(s, c) for c in cands)

    def test_k_range(self):
        with pytest.raises(IndexOutOfRange):
            arc.candidate_rays(build_scene(5), 3)

    @pytest.mark.parametrize("n", [3, 4, 5, 9, 20, 33])
    def test_geometry_of_candidates(self, n):
        s = build_scene(n)
        for k in range(1, n // 2 + 1):
            for c in arc.candidate_rays(s, k):
                d = c.apex - c.emission
                assert abs(line_distance(s.target.center, c.emission, d) - 1.0) <= 1e-10
                assert c.apex.x > n and c.apex.y == pytest.approx(0.0, abs=1e-9)
                if c.family is RayFamily.COMMON:
                    assert abs(line_distance(s.centers[k], c.emission, d) - 1.0) <= 1e-10


class TestAdmissible:
    def test_n3_endpoint_ray(self):
        s = build_scene(3)
        ends = [c for c in arc.candidate_rays(s, 1) if c.family is RayFamily.ENDPOINT]
        assert any(arc.is_admissible(s, c) for c in ends)

    def test_through_target(self):
        s = build_scene(3)
        bad = TangentSolution(1, Point(0.0, 0.0), Point(3.0, 0.0), Point(5.0, 0.0), 1.0, RayFamily.ENDPOINT)
        assert not arc.is_admissible(s, bad)


@pytest.mark.parametrize("n,k", [(5, 1), (19, 1), (20, 3)])
def test_find_illuminator(n, k):
    assert arc.find_illuminator(build_scene(n))[0] == k


@pytest.mark.parametrize("n,x", [(3, 2.3192), (4, 1.5637), (5, 1.2471)])
def test_apex_x_arc(n, x):
    assert arc.apex_x_arc(n) == pytest.approx(x, abs=5e-4)


def test_algebraic_n3_closed_form():
    assert abs(arc.solve_paper_equation(3) - arc.closed_form_n3()) <= 1e-12
    assert arc.closed_form_n3() == pytest.approx(2.3192, abs=5e-4)


@pytest.mark.parametrize("n,x", [(4, 1.5637), (5, 1.2471)])
def test_algebraic_roots(n, x):
    assert arc.solve_paper_equation(n) == pytest.approx(x, abs=5e-4)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_algebraic_residual_and_agreement(n):
    root = arc.solve_paper_equation(n)
    assert abs(arc.paper_equation(n)(root)) <= 1e-12
    assert abs(arc.apex_x_arc(n) - root) <= 1e-6


def test_n5_plus_reading_has_no_root():
    with pytest.raises(NoRootInBracket):
        arc.solve_paper_equation(5, reading="plus")


def test_unsupported_n():
    with pytest.raises(UnsupportedN):
        arc.solve_paper_equation(6)


def test_total_dark_area_arc():
    assert arc.total_dark_area_arc(1).tag is Darkness.ZERO
    assert arc.total_dark_area_arc(2).tag is Darkness.UNBOUNDED
    assert arc.total_dark_area_arc(3).value == pytest.approx(3.4665, abs=5e-4)
    assert arc.total_dark_area_arc(4).value == pytest.approx(2.24745, abs=5e-4)


@pytest.mark.parametrize("n", [3, 5])
def test_arc_lights_deeper_than_center(n):
    assert arc.apex_x_arc(n) < center.apex_x_closed(n)


def test_scan():
    rows = dict(arc.illuminator_scan(25))
    assert all(rows[n] == 1 for n in range(3, 20))
    assert rows[20] == 3


def test_chosen_is_minimal_and_admissible():
    for n in range(3, 51):
        s = build_scene(n)
        k, best = arc.find_illuminator(s)
        assert arc.is_admissible(s, best)
        for kk in range(1, n // 2 + 1):
            for c in arc.candidate_rays(s, kk):
                if arc.is_admissible(s, c):
                    assert best.x <= c.x


def test_second_closest_never_governs_up_to_thirty():
    ks = dict(arc.illuminator_scan(30))
    assert 2 not in ks.values()
    assert [ks[n] for n in (28, 29, 30)] == [3, 4, 4]
