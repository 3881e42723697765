"""Point light at each lighthouse center.

Each source emits from its center inside a cone of half-angle alpha/2 around
the direction to the placement center. For odd n the shadow behind a
lighthouse is closed by the two furthest lighthouses; for even n it never
closes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidN
from .geom import Point, Ray, ray_line_intersection, tangent_length, tangent_points
from .scene import (
    DarknessResult,
    RayFamily,
    TangentSolution,
    build_scene,
    total_from_single,
)

CONE_TOL = 1e-12
_X_AXIS = (Point(0.0, 0.0), Point(1.0, 0.0))


def _require_odd(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise InvalidN(f"expected an odd n >= 3, got n={n}")


def apex_x_closed(n: int) -> float:
    _require_odd(n)
    half = math.cos(math.pi / (2 * n)) ** 2
    s = math.sin(math.pi / n)
    denom = n * n * s * s - 1.0
    assert denom > 0.0
    return (math.sqrt(4 * n * n * half - 1.0) + 2 * n * n * s * half) / denom


def _shadow_closing_tangent(source: Point, n: int, cone_axis: float, half_angle: float):
    """Tangent from ``source`` to lighthouse 0 that meets the x-axis behind it.

    Returns ``(tangency, apex)`` or None. Tangents outside the emission cone
    are not emitted and never count.
    """
    target = build_scene(n).target
    for t in tangent_points(source, target):
        heading = (t - source).angle()
        off_axis = abs(math.remainder(heading - cone_axis, 2.0 * math.pi))
        if off_axis > half_angle + CONE_TOL:
            continue
        ray = Ray.through(source, t)
        apex = ray_line_intersection(ray, *_X_AXIS)
        if apex is None or apex.x <= n:
            continue
        if (apex - source).norm() <= (t - source).norm():
            continue
        return t, apex
    return None


def closing_sources(n: int) -> list[int]:
    """Indices of upper-half lighthouses whose center can close the shadow of lighthouse 0."""
    scene = build_scene(n)
    found = []
    for j in range(1, n // 2 + 1):
        hit = _shadow_closing_tangent(scene.centers[j], n, scene.facing_angle(j), scene.alpha / 2)
        if hit is not None:
            found.append(j)
    return found


def center_tangent(n: int) -> TangentSolution:
    """Governing ray for odd n, built from the furthest upper lighthouse."""
    _require_odd(n)
    m = (n - 1) // 2
    scene = build_scene(n)
    # the source sits at polar angle pi - pi/n, so angle(E, P, C) = pi - alpha/2
    source = Point.polar(float(n), math.pi - math.pi / n)
    hit = _shadow_closing_tangent(source, n, scene.facing_angle(m), scene.alpha / 2)
    assert hit is not None, f"no closing tangent for odd n={n}"
    tangency, apex = hit
    return TangentSolution(
        source_k=m,
        emission=source,
        tangency=tangency,
        apex=apex,
        x=tangent_length(apex, scene.target),
        family=RayFamily.CENTER,
    )


def apex_x_geometric(n: int) -> float:
    return center_tangent(n).x


def dark_single(x: float) -> float:
    """Shadow area behind one lighthouse given the apex tangent length ``x``."""
    if x < 0:
        raise ValueError("tangent length cannot be negative")
    return x - math.atan(x)


def total_dark_area(n: int) -> DarknessResult:
    if n < 1:
        raise InvalidN(f"n must be positive, got n={n}")
    if n == 1:
        return DarknessResult.zero()
    if n % 2 == 0:
        return DarknessResult.unbounded()
    return DarknessResult.finite(total_from_single(n, dark_single(apex_x_closed(n))))


def even_unbounded_check(n: int) -> bool:
    """True when no center source can close the shadow behind lighthouse 0."""
    if n < 2 or n % 2:
        raise InvalidN(f"expected an even n >= 2, got n={n}")
    return not closing_sources(n)


def odd_growth_scan(n_max: int) -> list[tuple[int, float]]:
    if n_max < 3:
        raise InvalidN(f"growth scan needs n_max >= 3, got {n_max}")
    return [(n, total_dark_area(n).value) for n in range(3, n_max + 1, 2)]


@dataclass(frozen=True)
class CenterSolution:
    """Closed-form solution for odd n, with the derivation's side lengths.

    ``y`` is the source's height above the axis, ``t`` the source-to-target
    center distance and ``z`` the tangent length from the source.
    """

    n: int
    x: float
    d_single: float
    d_total: DarknessResult
    y: float
    z: float
    t: float


def solve_center(n: int) -> CenterSolution:
    _require_odd(n)
    y = n * math.sin(math.pi / n)
    t = 2 * n * math.sin(math.pi / 2 * (1 - 1 / n))
    z = math.sqrt(t * t - 1.0)
    x = apex_x_closed(n)
    d = dark_single(x)
    return CenterSolution(n, x, d, DarknessResult.finite(n * d), y, z, t)
