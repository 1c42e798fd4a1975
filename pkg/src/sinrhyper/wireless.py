"""SINR-style wireless networks (noise ignored) and the hypergraphs they generate."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .geometry import Point2, apply_scaling, as_point, dist
from .hypergraph import Graph, Hypergraph, HypergraphError, TooLargeError, make_graph

MAX_STATIONS = 20


class NetworkError(ValueError):
    """Invalid wireless network or station subset."""


@dataclass(frozen=True)
class WirelessNetwork:
    """Stations in the plane with path-loss exponent ``alpha`` and threshold ``beta``."""

    stations: Tuple[Point2, ...]
    alpha: float = 4.0
    beta: float = 1.0

    def __post_init__(self):
        pts = tuple(as_point(p) for p in self.stations)
        object.__setattr__(self, "stations", pts)
        if not pts:
            raise NetworkError("a network needs at least one station")
        if not (self.alpha > 0 and math.isfinite(self.alpha)):
            raise NetworkError(f"alpha must be positive, got {self.alpha}")
        if not (self.beta > 0 and math.isfinite(self.beta)):
            raise NetworkError(f"beta must be positive, got {self.beta}")
        for i, j in combinations(range(len(pts)), 2):
            if dist(pts[i], pts[j]) == 0.0:
                raise NetworkError(f"stations {i} and {j} coincide")

    @property
    def n(self) -> int:
        return len(self.stations)

    def gain_matrix(self) -> np.ndarray:
        """Matrix of 1/d(i,j)^alpha with a zero diagonal."""
        xy = np.array([[p.x, p.y] for p in self.stations])
        d = np.sqrt(((xy[:, None, :] - xy[None, :, :]) ** 2).sum(-1))
        np.fill_diagonal(d, np.inf)
        return d ** -self.alpha

    def to_dict(self) -> dict:
        return {
            "stations": [[p.x, p.y] for p in self.stations],
            "alpha": float(self.alpha),
            "beta": float(self.beta),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "WirelessNetwork":
        try:
            stations = [Point2(float(x), float(y)) for x, y in data["stations"]]
            alpha = float(data.get("alpha", 4.0))
            beta = float(data.get("beta", 1.0))
        except (KeyError, TypeError, ValueError) as exc:
            raise NetworkError(f"malformed network JSON: {exc}") from exc
        return cls(tuple(stations), alpha, beta)

    @classmethod
    def from_json(cls, text: str) -> "WirelessNetwork":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise NetworkError(f"malformed network JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise NetworkError("network JSON must be an object")
        return cls.from_dict(data)


def example_k14_network() -> WirelessNetwork:
    """Centre at the origin with four stations on the axes at distance 1."""
    pts = [(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)]
    return WirelessNetwork(tuple(Point2(float(x), float(y)) for x, y in pts), 4.0, 1.0)


def _check_subset(net: WirelessNetwork, W: Iterable[int]) -> List[int]:
    W = sorted(set(W))
    for v in W:
        if not 0 <= v < net.n:
            raise NetworkError(f"station {v} outside 0..{net.n - 1}")
    return W


def energy(net: WirelessNetwork, W: Iterable[int], w: int) -> float:
    """Interference received at ``w`` when every other station of ``W`` transmits."""
    W = _check_subset(net, W)
    if w not in W:
        raise NetworkError(f"station {w} is not in the subset {W}")
    pw = net.stations[w]
    return sum(dist(net.stations[s], pw) ** -net.alpha for s in W if s != w)


def is_forbidden(net: WirelessNetwork, W: Iterable[int]) -> Optional[int]:
    """Return a station of ``W`` whose received energy reaches ``beta``, else ``None``."""
    W = _check_subset(net, W)
    if not W:
        raise NetworkError("forbidden-set test needs a nonempty subset")
    for w in W:
        if energy(net, W, w) >= net.beta:
            return w
    return None


def minimal_forbidden_sets(net: WirelessNetwork, max_size: Optional[int] = None) -> List[Tuple[int, ...]]:
    """All minimal forbidden sets of size at most ``max_size``, in canonical order.

    Subsets are visited by increasing size and any superset of an already found
    forbidden set is skipped, so every forbidden set reached is minimal.
    """
    n = net.n
    if n > MAX_STATIONS:
        raise TooLargeError(f"minimal_forbidden_sets supports at most {MAX_STATIONS} stations")
    if max_size is None:
        max_size = n
    if n < 2:
        return []
    if not 2 <= max_size <= n:
        raise NetworkError(f"max_size must lie in 2..{n}, got {max_size}")
    gain = net.gain_matrix()
    found: List[int] = []
    out: List[Tuple[int, ...]] = []
    for k in range(2, max_size + 1):
        for W in combinations(range(n), k):
            m = sum(1 << v for v in W)
            if any(f & m == f for f in found):
                continue
            idx = list(W)
            received = gain[np.ix_(idx, idx)].sum(axis=1)
            if np.any(received >= net.beta):
                found.append(m)
                out.append(W)
    return out


def generate_hypergraph(net: WirelessNetwork, max_size: Optional[int] = None) -> Hypergraph:
    edges = minimal_forbidden_sets(net, max_size)
    return Hypergraph(net.n, frozenset(frozenset(e) for e in edges))


def unit_disk_graph(points: Sequence) -> Graph:
    """Edge {i, j} exactly when the two points are at distance at most 1."""
    pts = [as_point(p) for p in points]
    edges = []
    for i, j in combinations(range(len(pts)), 2):
        d = dist(pts[i], pts[j])
        if d == 0.0:
            raise NetworkError(f"points {i} and {j} coincide")
        if d <= 1.0:
            edges.append((i, j))
    return make_graph(len(pts), edges)


def scale_network(net: WirelessNetwork, rho: float) -> WirelessNetwork:
    """Scale positions by ``rho`` and divide ``beta`` by rho**alpha; forbidden sets are preserved."""
    if not rho > 0:
        raise NetworkError(f"scale factor must be positive, got {rho}")
    if rho == 1:
        return net
    return WirelessNetwork(tuple(apply_scaling(net.stations, rho)), net.alpha, net.beta / rho**net.alpha)


def normalize_beta(net: WirelessNetwork) -> WirelessNetwork:
    """Rescale so that ``beta`` becomes 1."""
    if net.beta == 1.0:
        return net
    rho = math.exp(math.log(net.beta) / net.alpha)
    scaled = scale_network(net, rho)
    # beta / rho**alpha is 1 up to rounding; pin it exactly
    return WirelessNetwork(scaled.stations, scaled.alpha, 1.0)


__all__ = [
    "HypergraphError",
    "NetworkError",
    "WirelessNetwork",
    "energy",
    "example_k14_network",
    "generate_hypergraph",
    "is_forbidden",
    "minimal_forbidden_sets",
    "normalize_beta",
    "scale_network",
    "unit_disk_graph",
]
