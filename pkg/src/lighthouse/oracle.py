"""Monte Carlo ray-casting check of the dark area, independent of the solvers.

Light is traced point by point: a sample is lit when some emitter has a clear
segment to it. Arc emitters are a uniform angular grid over each illuminated
arc, so a dark verdict is approximate from the conservative side.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numba
import numpy as np

from .errors import PointInsideBody, UnboundedRegion
from .geom import GRAZE_TOL, Point
from .scene import Scene, Variant

LIT, DARK, BODY = 0, 1, 2
HALF_HEIGHT = 1.2
MAX_EXTENT = 1e4
PARTITION = 1 << 16
# slack on the visible-cap window; the exact segment test decides
_CAP_SLACK = 1e-6


@dataclass(frozen=True)
class OracleConfig:
    arc_samples: int = 720
    graze_tol: float = GRAZE_TOL
    probe_distances: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.arc_samples < 2:
            raise ValueError("need at least two emitters per arc")
        if self.probe_distances is not None:
            d = self.probe_distances
            if any(b <= a for a, b in zip(d, d[1:])):
                raise ValueError("probe distances must be strictly increasing")

    def probes_for(self, n: int) -> tuple[float, ...]:
        if self.probe_distances is not None:
            return tuple(self.probe_distances)
        return (n + 10.0, n + 100.0, n + 1000.0)


@dataclass(frozen=True)
class AreaEstimate:
    mean: float
    std_error: float
    samples: int
    seed: int


@numba.njit(cache=True, inline="always")
def _seg_blocked(ax, ay, bx, by, cx, cy, tol):
    ux = bx - ax
    uy = by - ay
    L2 = ux * ux + uy * uy
    t = 0.0
    if L2 > 0.0:
        t = ((cx - ax) * ux + (cy - ay) * uy) / L2
        t = min(1.0, max(0.0, t))
    qx = ax + t * ux - cx
    qy = ay + t * uy - cy
    return math.sqrt(qx * qx + qy * qy) < 1.0 - tol


@numba.njit(cache=True)
def _remainder(a):
    two_pi = 2.0 * math.pi
    return a - two_pi * math.floor(a / two_pi + 0.5)


@numba.njit(cache=True)
def _lit_center(px, py, cx, cy, half, tol):
    n = cx.shape[0]
    for j in range(n):
        heading = math.atan2(py - cy[j], px - cx[j])
        facing = math.atan2(-cy[j], -cx[j])
        if abs(_remainder(heading - facing)) > half + 1e-12:
            continue
        clear = True
        for i in range(n):
            if i != j and _seg_blocked(cx[j], cy[j], px, py, cx[i], cy[i], tol):
                clear = False
                break
        if clear:
            return True
    return False


@numba.njit(cache=True)
def _lit_arc(px, py, cx, cy, half, ex, ey, tol):
    n, m_samples = ex.shape
    step = 2.0 * half / (m_samples - 1)
    two_pi = 2.0 * math.pi
    for j in range(n):
        dx = px - cx[j]
        dy = py - cy[j]
        d = math.sqrt(dx * dx + dy * dy)
        cap = math.acos(min(1.0, 1.0 / d)) + _CAP_SLACK
        facing = math.atan2(-cy[j], -cx[j])
        rel = _remainder(math.atan2(dy, dx) - facing)
        for shift in (-two_pi, 0.0, two_pi):
            lo = max(-half, rel - cap + shift)
            hi = min(half, rel + cap + shift)
            if lo > hi:
                continue
            m_lo = max(0, int(math.ceil((lo + half) / step)))
            m_hi = min(m_samples - 1, int(math.floor((hi + half) / step)))
            for m in range(m_lo, m_hi + 1):
                sx = ex[j, m]
                sy = ey[j, m]
                clear = True
                for i in range(n):
                    if _seg_blocked(sx, sy, px, py, cx[i], cy[i], tol):
                        clear = False
                        break
                if clear:
                    return True
    return False


@numba.njit(cache=True, nogil=True)
def _classify(xs, ys, cx, cy, half, arc_mode, ex, ey, tol):
    out = np.empty(xs.shape[0], dtype=np.int8)
    n = cx.shape[0]
    for k in range(xs.shape[0]):
        px = xs[k]
        py = ys[k]
        inside = False
        for i in range(n):
            if (px - cx[i]) ** 2 + (py - cy[i]) ** 2 < 1.0:
                inside = True
                break
        if inside:
            out[k] = BODY
        elif arc_mode:
            out[k] = LIT if _lit_arc(px, py, cx, cy, half, ex, ey, tol) else DARK
        else:
            out[k] = LIT if _lit_center(px, py, cx, cy, half, tol) else DARK
    return out


def emitter_grid(scene: Scene, arc_samples: int) -> tuple[np.ndarray, np.ndarray]:
    """Emitter coordinates, shape ``(n, arc_samples)``, evenly spaced by angle over each arc."""
    half = scene.alpha / 2.0
    facing = np.array([scene.facing_angle(i) for i in range(scene.n)])
    theta = facing[:, None] - half + np.arange(arc_samples)[None, :] * (2.0 * half / (arc_samples - 1))
    cx = np.array([c.x for c in scene.centers])[:, None]
    cy = np.array([c.y for c in scene.centers])[:, None]
    return cx + np.cos(theta), cy + np.sin(theta)


def classify_points(scene: Scene, variant: Variant, xs, ys, cfg: OracleConfig = OracleConfig()) -> np.ndarray:
    """Vectorised verdicts: ``LIT``, ``DARK`` or ``BODY`` per point."""
    cx = np.array([c.x for c in scene.centers], dtype=np.float64)
    cy = np.array([c.y for c in scene.centers], dtype=np.float64)
    xs = np.ascontiguousarray(xs, dtype=np.float64)
    ys = np.ascontiguousarray(ys, dtype=np.float64)
    ex, ey = emitter_grid(scene, cfg.arc_samples)
    return _classify(xs, ys, cx, cy, scene.alpha / 2.0, variant is Variant.ARC, ex, ey, cfg.graze_tol)


def is_illuminated(scene: Scene, variant: Variant, p: Point, cfg: OracleConfig = OracleConfig()) -> bool:
    verdict = classify_points(scene, variant, [p.x], [p.y], cfg)[0]
    if verdict == BODY:
        raise PointInsideBody(f"{p} is inside a lighthouse body")
    return verdict == LIT


def _strip_lit(scene, variant, cfg, x_lo, x_hi) -> bool:
    gx, gy = np.meshgrid(np.linspace(x_lo, x_hi, 17), np.linspace(-HALF_HEIGHT, HALF_HEIGHT, 49))
    verdict = classify_points(scene, variant, gx.ravel(), gy.ravel(), cfg)
    return not np.any(verdict == DARK)


def shadow_extent(scene: Scene, variant: Variant, cfg: OracleConfig = OracleConfig()) -> float:
    """Grow the sampling box behind lighthouse 0 until its far strip is fully lit."""
    n = scene.n
    length = 2.0
    while length <= MAX_EXTENT:
        far = n + 1.0 + length
        if _strip_lit(scene, variant, cfg, far - 0.1 * length, far):
            return length
        length *= 2.0
    raise UnboundedRegion(f"shadow behind lighthouse 0 reaches past {MAX_EXTENT} units")


def _count_dark(scene, variant, cfg, x0, width, seed_seq, count) -> int:
    rng = np.random.default_rng(seed_seq)
    xs = x0 + width * rng.random(count)
    ys = HALF_HEIGHT * (2.0 * rng.random(count) - 1.0)
    return int(np.count_nonzero(classify_points(scene, variant, xs, ys, cfg) == DARK))


def estimate_dark_area(
    scene: Scene,
    variant: Variant,
    cfg: OracleConfig = OracleConfig(),
    samples: int = 1_000_000,
    seed: int = 42,
    extent: float | None = None,
    workers: int = 1,
) -> AreaEstimate:
    """Dark area behind lighthouse 0 by uniform rejection sampling.

    The box spans ``x`` in ``[n, n + 1 + extent]`` and ``|y| <= 1.2``. Without
    an explicit ``extent`` it is grown until a fully lit far strip is seen.
    Samples are cut into fixed partitions seeded from ``(seed, index)``, so the
    result does not depend on ``workers``.
    """
    if samples < 10_000:
        raise ValueError("use at least 10^4 samples")
    if extent is None:
        extent = shadow_extent(scene, variant, cfg)
    width = 1.0 + extent
    box = width * 2.0 * HALF_HEIGHT
    sizes = [PARTITION] * (samples // PARTITION)
    if samples % PARTITION:
        sizes.append(samples % PARTITION)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    job = lambda args: _count_dark(scene, variant, cfg, float(scene.n), width, *args)  # noqa: E731
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(job, zip(children, sizes)))
    else:
        hits = sum(map(job, zip(children, sizes)))
    frac = hits / samples
    return AreaEstimate(
        mean=frac * box,
        std_error=math.sqrt(frac * (1.0 - frac) / samples) * box,
        samples=samples,
        seed=seed,
    )


def probe_unbounded(scene: Scene, variant: Variant, cfg: OracleConfig = OracleConfig()) -> bool:
    """Dark at every probe distance along the axis behind lighthouse 0."""
    probes = np.array(cfg.probes_for(scene.n), dtype=np.float64)
    verdict = classify_points(scene, variant, probes, np.zeros_like(probes), cfg)
    return bool(np.all(verdict == DARK))
