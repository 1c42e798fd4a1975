"""Planar geometry primitives and the chord-energy function for points on the unit circle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

import numpy as np

# Half-width of the domain of g: the two adjacent gap excesses sum to 2*pi/15.
G_HALF_WIDTH = math.pi / 15
SECTOR_ANGLE = math.pi / 3
_BALL_TOL = 1e-12


class GeometryError(ValueError):
    """Raised when a geometric precondition is violated."""


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"non-finite coordinate in ({self.x}, {self.y})")

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class PolarPoint:
    r: float
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and math.isfinite(self.theta)):
            raise GeometryError("non-finite polar coordinate")
        if self.r < 0:
            raise GeometryError(f"negative radius {self.r}")
        object.__setattr__(self, "theta", normalize_angle(self.theta))


def normalize_angle(theta: float) -> float:
    """Map an angle into (-pi, pi]."""
    t = math.remainder(theta, 2 * math.pi)
    if t <= -math.pi:
        t += 2 * math.pi
    return t


def as_point(p) -> Point2:
    if isinstance(p, Point2):
        return p
    x, y = p
    return Point2(float(x), float(y))


def dist(p, q) -> float:
    p, q = as_point(p), as_point(q)
    return math.hypot(p.x - q.x, p.y - q.y)


def polar_to_cart(p: PolarPoint) -> Point2:
    return Point2(p.r * math.cos(p.theta), p.r * math.sin(p.theta))


def cart_to_polar(p) -> PolarPoint:
    p = as_point(p)
    if p.x == 0.0 and p.y == 0.0:
        raise GeometryError("the origin has no polar angle")
    return PolarPoint(math.hypot(p.x, p.y), math.atan2(p.y, p.x))


def apply_scaling(points: Iterable, rho: float) -> List[Point2]:
    """Scale every point about the origin by ``rho``."""
    if not rho > 0:
        raise GeometryError(f"scale factor must be positive, got {rho}")
    return [Point2(rho * p.x, rho * p.y) for p in map(as_point, points)]


def radial_project(points: Iterable) -> List[Point2]:
    """Push each point of the punctured unit ball radially out to the unit circle.

    When all pairwise input distances exceed 1, no pairwise distance decreases.
    """
    out = []
    for p in map(as_point, points):
        r = p.norm()
        if r == 0.0:
            raise GeometryError("cannot project the origin")
        if r > 1.0 + _BALL_TOL:
            raise GeometryError(f"point {p} lies outside the unit ball")
        out.append(Point2(p.x / r, p.y / r))
    return out


def _check_g_domain(delta) -> None:
    d = np.abs(np.asarray(delta, dtype=float))
    if np.any(d > G_HALF_WIDTH + 1e-15):
        raise GeometryError(f"delta outside [-pi/15, pi/15]: {delta}")


def g_delta(delta):
    """Interference at the middle of three unit-circle points.

    The neighbours sit at angular offsets 2*pi/5 + delta and 2*pi/5 - delta, so
    each term is 1/chord^4 with chord^2 = 2 (1 - cos angle). Accepts scalars or
    arrays.
    """
    _check_g_domain(delta)
    d = np.asarray(delta, dtype=float)
    a = 2 * np.pi / 5
    val = 1.0 / (4.0 * (1.0 - np.cos(a + d)) ** 2) + 1.0 / (4.0 * (1.0 - np.cos(a - d)) ** 2)
    return float(val) if val.ndim == 0 else val


def g_delta_chord(delta: float) -> float:
    """Same quantity as :func:`g_delta`, evaluated from explicit point coordinates."""
    _check_g_domain(delta)
    a = 2 * math.pi / 5
    s1 = Point2(1.0, 0.0)
    s2 = polar_to_cart(PolarPoint(1.0, a + delta))
    s5 = polar_to_cart(PolarPoint(1.0, a - delta))
    return dist(s1, s2) ** -4 + dist(s1, s5) ** -4


def minimize_g(grid_points: int) -> Tuple[float, float]:
    """Grid minimiser of g over [-pi/15, pi/15]; returns ``(delta_star, g_star)``."""
    if grid_points < 3:
        raise ValueError("grid_points must be at least 3")
    grid = np.linspace(-G_HALF_WIDTH, G_HALF_WIDTH, grid_points)
    if grid_points % 2 == 1:
        grid[grid_points // 2] = 0.0  # exact midpoint, linspace can leave ~1e-17
    vals = g_delta(grid)
    k = int(np.argmin(vals))
    return float(grid[k]), float(vals[k])


def in_unit_sector(p: PolarPoint, tol: float = 1e-12) -> bool:
    return p.r <= 1.0 + tol and -tol <= p.theta <= SECTOR_ANGLE + tol


def max_pairwise_distance_in_sector(samples: Sequence[PolarPoint]) -> float:
    """Diameter of a sample drawn from the closed 60-degree sector of the unit ball."""
    for p in samples:
        if not in_unit_sector(p):
            raise GeometryError(f"sample {p} outside the 60-degree unit sector")
    if len(samples) < 2:
        return 0.0
    xy = np.array([[p.r * math.cos(p.theta), p.r * math.sin(p.theta)] for p in samples])
    if len(xy) <= 2000:
        diff = xy[:, None, :] - xy[None, :, :]
        return float(np.sqrt((diff**2).sum(-1)).max())
    best = 0.0
    for i in range(len(xy) - 1):
        d = np.hypot(*(xy[i + 1 :] - xy[i]).T).max()
        best = max(best, float(d))
    return best


def pairwise_distances(points: Sequence) -> List[Tuple[int, int, float]]:
    pts = [as_point(p) for p in points]
    return [(i, j, dist(pts[i], pts[j])) for i, j in combinations(range(len(pts)), 2)]
