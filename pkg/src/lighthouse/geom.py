"""Plain 2D primitives: tangents from points and between circles, occlusion tests.

All tolerances are explicit keyword arguments. Nothing here knows about
lighthouses; the scene-level modules build on these.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateInput, NoTangents, PointInsideCircle

# A point exactly this close to a circle boundary counts as on the circle.
ON_CIRCLE_TOL = 1e-12
PARALLEL_TOL = 1e-12
GRAZE_TOL = 1e-9


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __add__(self, other: Point) -> Point:
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> Point:
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> Point:
        return Point(-self.x, -self.y)

    def __iter__(self):
        yield self.x
        yield self.y

    def dot(self, other: Point) -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> float:
        return self.x * other.y - self.y * other.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Point:
        d = self.norm()
        if d == 0.0:
            raise DegenerateInput("cannot normalise the zero vector")
        return Point(self.x / d, self.y / d)

    def perp(self) -> Point:
        """Rotate 90 degrees counter-clockwise."""
        return Point(-self.y, self.x)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)

    @classmethod
    def polar(cls, r: float, theta: float) -> Point:
        return cls(r * math.cos(theta), r * math.sin(theta))


def distance(a: Point, b: Point) -> float:
    return math.hypot(a.x - b.x, a.y - b.y)


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float = 1.0

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise ValueError(f"radius must be positive and finite, got {self.radius}")

    def point_at(self, theta: float) -> Point:
        return self.center + Point.polar(self.radius, theta)


@dataclass(frozen=True)
class Ray:
    origin: Point
    direction: Point

    def __post_init__(self):
        if abs(self.direction.norm() - 1.0) > 1e-12:
            raise ValueError("ray direction must be a unit vector")

    @classmethod
    def through(cls, a: Point, b: Point) -> Ray:
        return cls(a, (b - a).unit())

    def at(self, t: float) -> Point:
        return self.origin + self.direction * t


@dataclass(frozen=True)
class TangencyPair:
    """A tangent line given by its touching point and unit direction."""

    line_point: Point
    line_dir: Point


def tangent_length(p: Point, c: Circle) -> float:
    d = distance(p, c.center)
    if d < c.radius - ON_CIRCLE_TOL:
        raise PointInsideCircle(f"{p} lies inside {c}")
    return math.sqrt(max(d * d - c.radius * c.radius, 0.0))


def tangent_points(p: Point, c: Circle) -> tuple[Point, ...]:
    """Points where lines through ``p`` touch ``c``.

    Two points when ``p`` is outside the circle, ordered counter-clockwise
    first as seen from the center; a single point when ``p`` is on it.
    """
    offset = p - c.center
    d = offset.norm()
    if d < c.radius - ON_CIRCLE_TOL:
        raise PointInsideCircle(f"{p} lies inside {c}")
    if d <= c.radius + ON_CIRCLE_TOL:
        return (c.point_at(offset.angle()),)
    spread = math.acos(c.radius / d)
    base = offset.angle()
    return (c.point_at(base + spread), c.point_at(base - spread))


def common_tangents(c1: Circle, c2: Circle) -> list[tuple[TangencyPair, TangencyPair]]:
    """All lines tangent to both circles, as (touch on c1, touch on c2) pairs.

    External tangents come first. Coincident lines (touching circles) are
    reported once.
    """
    d_vec = c2.center - c1.center
    d = d_vec.norm()
    if d == 0.0 and c1.radius == c2.radius:
        raise DegenerateInput("identical circles have infinitely many common tangents")
    if d == 0.0:
        raise NoTangents("concentric circles share no tangent")
    u = d_vec * (1.0 / d)
    out: list[tuple[TangencyPair, TangencyPair]] = []
    for side in (1.0, -1.0):  # +1 external, -1 internal
        cos_n = (c1.radius - side * c2.radius) / d
        if abs(cos_n) > 1.0 + ON_CIRCLE_TOL:
            continue
        cos_n = max(-1.0, min(1.0, cos_n))
        sin_n = math.sqrt(1.0 - cos_n * cos_n)
        normals = [u * cos_n + u.perp() * (s * sin_n) for s in (1.0, -1.0)]
        if sin_n <= ON_CIRCLE_TOL:
            normals = normals[:1]
        for nrm in normals:
            t1 = c1.center + nrm * c1.radius
            t2 = c2.center + nrm * (side * c2.radius)
            direction = nrm.perp()
            out.append((TangencyPair(t1, direction), TangencyPair(t2, direction)))
    if not out:
        raise NoTangents("one circle lies strictly inside the other")
    return out


def point_segment_distance(q: Point, a: Point, b: Point) -> float:
    ab = b - a
    denom = ab.dot(ab)
    if denom == 0.0:
        return distance(q, a)
    t = max(0.0, min(1.0, (q - a).dot(ab) / denom))
    return distance(q, a + ab * t)


def line_distance(q: Point, line_point: Point, line_dir: Point) -> float:
    """Distance from ``q`` to an infinite line; ``line_dir`` need not be unit."""
    return abs(line_dir.cross(q - line_point)) / line_dir.norm()


def segment_hits_disk(a: Point, b: Point, c: Circle, tol: float = GRAZE_TOL) -> bool:
    """True when the closed segment ab enters the disk deeper than ``tol``.

    A segment that only grazes the boundary does not hit.
    """
    return point_segment_distance(c.center, a, b) < c.radius - tol


def ray_line_intersection(ray: Ray, line_point: Point, line_dir: Point) -> Point | None:
    denom = ray.direction.cross(line_dir)
    if abs(denom) < PARALLEL_TOL * line_dir.norm():
        return None
    t = (line_point - ray.origin).cross(line_dir) / denom
    if t <= 0.0:
        return None
    return ray.at(t)


def reflect(q: Point, line_point: Point, line_dir: Point) -> Point:
    """Mirror ``q`` across the line through ``line_point`` along ``line_dir``."""
    u = line_dir.unit()
    rel = q - line_point
    along = u * rel.dot(u)
    return line_point + along * 2.0 - rel
