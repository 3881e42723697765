"""Point lights along each lighthouse's illuminated arc.

Every point of the arc facing the placement center emits in all directions
that do not cut back through a lighthouse body (grazing is allowed). The
shadow behind lighthouse 0 is closed by whichever admissible extreme ray
meets the symmetry axis closest to the body. Extreme rays come from two
families: tangents to the target drawn from an arc endpoint, and common
tangents of source and target that touch the source inside its arc.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .errors import IndexOutOfRange, InvalidN, NoIlluminator, NoRootInBracket, UnsupportedN
from .geom import (
    GRAZE_TOL,
    Point,
    Ray,
    common_tangents,
    distance,
    ray_line_intersection,
    segment_hits_disk,
    tangent_points,
)
from .scene import DarknessResult, RayFamily, Scene, TangentSolution, build_scene, total_from_single
from .center import dark_single

ARC_TOL = 1e-12
_X_AXIS = (Point(0.0, 0.0), Point(1.0, 0.0))


@dataclass(frozen=True)
class ArcSpan:
    lighthouse_index: int
    endpoint_a: Point
    endpoint_b: Point
    center_angle: float
    half_width: float

    @property
    def full_circle(self) -> bool:
        return self.half_width >= math.pi

    def contains(self, theta: float, tol: float = ARC_TOL) -> bool:
        """Whether polar angle ``theta`` (about the lighthouse center) is on the arc."""
        if self.full_circle:
            return True
        return abs(math.remainder(theta - self.center_angle, 2.0 * math.pi)) <= self.half_width + tol


def illuminated_arc(scene: Scene, i: int) -> ArcSpan:
    if not 0 <= i < scene.n:
        raise IndexOutOfRange(f"lighthouse index {i} outside 0..{scene.n - 1}")
    circle = scene.circles[i]
    mid = scene.facing_angle(i)
    half = scene.alpha / 2.0
    return ArcSpan(
        lighthouse_index=i,
        endpoint_a=circle.point_at(mid - half),
        endpoint_b=circle.point_at(mid + half),
        center_angle=mid,
        half_width=half,
    )


def _closing_ray(scene: Scene, k: int, emission: Point, tangency: Point, family: RayFamily):
    if distance(emission, tangency) == 0.0:
        return None
    ray = Ray.through(emission, tangency)
    apex = ray_line_intersection(ray, *_X_AXIS)
    if apex is None or apex.x <= scene.n:
        return None
    if distance(emission, apex) <= distance(emission, tangency):
        return None
    return TangentSolution(
        source_k=k,
        emission=emission,
        tangency=tangency,
        apex=apex,
        x=distance(tangency, apex),
        family=family,
    )


def candidate_rays(scene: Scene, k: int) -> list[TangentSolution]:
    """Extreme rays from lighthouse ``k`` that cross the axis behind lighthouse 0.

    Admissibility is not checked here; see :func:`is_admissible`.
    """
    if not 1 <= k <= scene.n // 2:
        raise IndexOutOfRange(f"source index {k} outside 1..{scene.n // 2}")
    span = illuminated_arc(scene, k)
    source = scene.circles[k]
    target = scene.target
    found = []
    for end in (span.endpoint_a, span.endpoint_b):
        for t in tangent_points(end, target):
            sol = _closing_ray(scene, k, end, t, RayFamily.ENDPOINT)
            if sol is not None:
                found.append(sol)
    for on_source, on_target in common_tangents(source, target):
        theta = (on_source.line_point - source.center).angle()
        if not span.contains(theta):
            continue
        sol = _closing_ray(scene, k, on_source.line_point, on_target.line_point, RayFamily.COMMON)
        if sol is not None:
            found.append(sol)
    return found


def is_admissible(scene: Scene, sol: TangentSolution, tol: float = GRAZE_TOL) -> bool:
    """The ray from emission to apex must not pass through any body, its own included."""
    return not any(segment_hits_disk(sol.emission, sol.apex, c, tol) for c in scene.circles)


def find_illuminator(scene: Scene) -> tuple[int, TangentSolution]:
    if scene.n < 2:
        raise InvalidN("a lone lighthouse casts no shadow")
    best = None
    for k in range(1, scene.n // 2 + 1):
        for sol in candidate_rays(scene, k):
            if not is_admissible(scene, sol):
                continue
            if best is None or (sol.x, sol.source_k) < (best.x, best.source_k):
                best = sol
    if best is None:
        raise NoIlluminator(f"no admissible ray closes the shadow for n={scene.n}")
    return best.source_k, best


def apex_x_arc(n: int) -> float:
    if n < 3:
        raise InvalidN(f"expected n >= 3, got n={n}")
    return find_illuminator(build_scene(n))[1].x


def total_dark_area_arc(n: int) -> DarknessResult:
    if n < 1:
        raise InvalidN(f"n must be positive, got n={n}")
    if n == 1:
        return DarknessResult.zero()
    try:
        _, sol = find_illuminator(build_scene(n))
    except NoIlluminator:
        return DarknessResult.unbounded()
    return DarknessResult.finite(total_from_single(n, dark_single(sol.x)))


def illuminator_scan(n_max: int) -> list[tuple[int, int]]:
    if n_max < 3:
        raise InvalidN(f"illuminator scan needs n_max >= 3, got {n_max}")
    return [(n, find_illuminator(build_scene(n))[0]) for n in range(3, n_max + 1)]


# Hand-derived tangency equations for small n, written as f(x) = 0.

_R2, _R3, _R5 = math.sqrt(2.0), math.sqrt(3.0), math.sqrt(5.0)
READINGS = ("minus", "plus")


def _eq3(x: float) -> float:
    # emitter height 3*sqrt(3)/2 above the axis, 7/2 to the left of the target center
    return 1.5 * _R3 * x - 3.5 - math.sqrt(1.0 + x * x)


def _eq4(x: float) -> float:
    a = 4.0 - 1.0 / _R2
    return x * math.sqrt(32.0 - 8.0 * _R2) - 1.0 - a * math.sqrt(1.0 + x * x)


def _n5_b_squared(reading: str) -> float:
    a_sq = 6.0 - 2.0 * _R5
    inner = 6.0 - 2.0 * _R5 if reading == "minus" else 6.0 + 2.0 * _R5
    fc = 5.0 - 1.5 * math.sqrt(inner)
    return fc * fc + 16.0 - a_sq


def _eq5(reading: str):
    b_sq = _n5_b_squared(reading)

    def f(x: float) -> float:
        return (x * x + b_sq - 1.0 + 2.0 * x * math.sqrt(b_sq - 1.0)) - (1.0 + x * x) * (10.0 + 2.0 * _R5)

    return f


def paper_equation(n: int, reading: str = "minus"):
    """The residual function whose positive root is the apex tangent length."""
    if reading not in READINGS:
        raise ValueError(f"reading must be one of {READINGS}")
    if n == 3:
        return _eq3
    if n == 4:
        return _eq4
    if n == 5:
        return _eq5(reading)
    raise UnsupportedN(f"no hand-derived equation for n={n}")


def solve_paper_equation(n: int, reading: str = "minus", bracket=(1e-6, 100.0)) -> float:
    """Root of the hand-derived tangency equation for n in {3, 4, 5}.

    ``reading`` only matters for n=5, where the length from the foot point to
    the target center was printed with both signs under the inner root.
    """
    f = paper_equation(n, reading)
    lo, hi = bracket
    if f(lo) * f(hi) > 0:
        raise NoRootInBracket(f"n={n} ({reading}): no sign change on [{lo}, {hi}]")
    return brentq(f, lo, hi, xtol=1e-15, rtol=1e-15, maxiter=200)


def closed_form_n3() -> float:
    return 3.0 * (4.0 * _R2 + 7.0 * _R3) / 23.0
