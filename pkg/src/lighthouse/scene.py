"""The n-lighthouse configuration and the quantities shared by both light models."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidN
from .geom import Circle, Point

ORIGIN = Point(0.0, 0.0)


@dataclass(frozen=True)
class Scene:
    """n unit circles on a ring of radius n, lighthouse 0 on the positive x-axis.

    Lighthouses are numbered counter-clockwise; each faces the placement
    center with aperture ``alpha``.
    """

    n: int
    centers: tuple[Point, ...]
    alpha: float
    radius: float = 1.0
    placement_center: Point = ORIGIN

    @cached_property
    def circles(self) -> tuple[Circle, ...]:
        return tuple(Circle(c, self.radius) for c in self.centers)

    @property
    def target(self) -> Circle:
        return self.circles[0]

    def facing_angle(self, i: int) -> float:
        """Polar direction from lighthouse ``i`` toward the placement center."""
        return 2.0 * math.pi * i / self.n + math.pi


def build_scene(n: int) -> Scene:
    if n < 1:
        raise InvalidN(f"need at least one lighthouse, got n={n}")
    alpha = 2.0 * math.pi / n
    centers = tuple(Point.polar(float(n), alpha * i) for i in range(n))
    # exact zero off-axis for the canonical target
    centers = (Point(float(n), 0.0),) + centers[1:]
    return Scene(n=n, centers=centers, alpha=alpha)


def neighbor_distance(n: int) -> float:
    if n < 2:
        raise InvalidN(f"neighbor distance needs n >= 2, got n={n}")
    return 2.0 * n * math.sin(math.pi / n)


def gray_area(n: int) -> tuple[float, float]:
    """Area of the non-emitting body part: (per lighthouse, all lighthouses)."""
    if n < 1:
        raise InvalidN(f"n must be positive, got n={n}")
    single = math.pi * (1.0 - 1.0 / n)
    return single, math.pi * (n - 1)


def total_from_single(n: int, d_single: float) -> float:
    if d_single < 0:
        raise ValueError("per-lighthouse dark area cannot be negative")
    return n * d_single


class Darkness(enum.Enum):
    ZERO = "zero"
    FINITE = "finite"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class DarknessResult:
    tag: Darkness
    value: float | None = None

    def __post_init__(self):
        if self.tag is Darkness.FINITE:
            if self.value is None or not self.value > 0:
                raise ValueError("a finite dark area must be a positive number")
        elif self.value is not None:
            raise ValueError(f"{self.tag.value} results carry no value")

    @classmethod
    def zero(cls) -> DarknessResult:
        return cls(Darkness.ZERO)

    @classmethod
    def finite(cls, value: float) -> DarknessResult:
        return cls(Darkness.FINITE, float(value))

    @classmethod
    def unbounded(cls) -> DarknessResult:
        return cls(Darkness.UNBOUNDED)

    @property
    def is_finite(self) -> bool:
        return self.tag is Darkness.FINITE

    def as_number(self) -> float:
        """Numeric view for tables: 0, the value, or ``math.inf``."""
        if self.tag is Darkness.ZERO:
            return 0.0
        if self.tag is Darkness.UNBOUNDED:
            return math.inf
        return self.value


class RayFamily(enum.Enum):
    ENDPOINT = "endpoint"
    COMMON = "common"
    CENTER = "center"


@dataclass(frozen=True)
class TangentSolution:
    """A ray that closes the shadow behind lighthouse 0 on its upper side.

    ``x`` is the tangent length from ``tangency`` to ``apex``; the lower
    boundary is the mirror image across the x-axis.
    """

    source_k: int
    emission: Point
    tangency: Point
    apex: Point
    x: float
    family: RayFamily

    def mirrored(self) -> TangentSolution:
        flip = lambda p: Point(p.x, -p.y)  # noqa: E731
        return TangentSolution(
            self.source_k, flip(self.emission), flip(self.tangency), flip(self.apex), self.x, self.family
        )


class Variant(enum.Enum):
    CENTER = "center"
    ARC = "arc"
