"""Numerical checks of the geometric and wireless lemmas behind the K_{1,5} result.

Each check returns a :class:`CheckResult`; :func:`run_all` drives the lot and
is what ``sinrhyper verify-lemmas`` prints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, List

import numpy as np

from .geometry import (
    G_HALF_WIDTH,
    SECTOR_ANGLE,
    Point2,
    PolarPoint,
    dist,
    g_delta,
    g_delta_chord,
    max_pairwise_distance_in_sector,
    minimize_g,
    radial_project,
)
from .hypergraph import are_isomorphic, star
from .realizability import sample_qualifying_five, verify_k15_nonrealizable
from .wireless import (
    WirelessNetwork,
    energy,
    example_k14_network,
    generate_hypergraph,
    normalize_beta,
    scale_network,
    unit_disk_graph,
)

G_ZERO = (3 + math.sqrt(5)) / 5


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def check_g_minimum(grid_points: int = 1001) -> CheckResult:
    delta_star, g_star = minimize_g(grid_points)
    grid = np.linspace(-G_HALF_WIDTH, G_HALF_WIDTH, grid_points)
    vals = g_delta(grid)
    second = vals[2:] - 2 * vals[1:-1] + vals[:-2]
    min_second = float(second.min(initial=math.inf))
    chord_gap = max(abs(g_delta(d) - g_delta_chord(d)) for d in grid[:: max(1, grid_points // 50)])
    even_gap = float(np.max(np.abs(vals - vals[::-1])))
    ok = (
        abs(g_delta(0.0) - G_ZERO) <= 1e-9
        and abs(g_star - G_ZERO) <= 1e-9
        and abs(delta_star) <= 1e-12
        and float(vals.min()) > 1.0
        and min_second >= -1e-9
        and even_gap <= 1e-12
        and chord_gap <= 1e-9
    )
    return CheckResult(
        "g-minimum",
        ok,
        f"argmin={delta_star:.3g} min={g_star:.12g} (expected {G_ZERO:.12g}), "
        f"min second difference={min_second:.3g}, chord/cosine gap={chord_gap:.2g}",
    )


def _sector_samples(rng: np.random.Generator, count: int) -> List[PolarPoint]:
    r = np.sqrt(rng.random(count))
    t = rng.uniform(0.0, SECTOR_ANGLE, count)
    return [PolarPoint(float(a), float(b)) for a, b in zip(r, t)]


def check_sector_diameter(pairs: int, rng: np.random.Generator) -> CheckResult:
    worst = 0.0
    for _ in range(pairs):
        worst = max(worst, max_pairwise_distance_in_sector(_sector_samples(rng, 2)))
    return CheckResult("sector-diameter", worst <= 1 + 1e-12, f"max distance {worst:.12g} over {pairs} pairs")


def check_radial_projection(sets: int, rng: np.random.Generator) -> CheckResult:
    worst = math.inf
    for _ in range(sets):
        pts = sample_qualifying_five(rng)
        proj = radial_project(pts)
        for i, j in combinations(range(5), 2):
            worst = min(worst, dist(proj[i], proj[j]) - dist(pts[i], pts[j]))
    return CheckResult("radial-projection", worst >= 0.0, f"smallest distance gain {worst:.3g} over {sets} five-point sets")


def check_example_k14() -> CheckResult:
    net = example_k14_network()
    H = generate_hypergraph(net)
    e = energy(net, [1, 2, 3, 4], 1)
    edges_ok = H.sorted_edges() == [(0, 1), (0, 2), (0, 3), (0, 4)]
    ok = edges_ok and are_isomorphic(H, star(4)) and abs(e - 9 / 16) <= 1e-12
    return CheckResult("example-k14", ok, f"edges={H.sorted_edges()} leaf energy={e:.12g}")


def random_network(rng: np.random.Generator, n: int, side: float = 2.5, alpha: float = 4.0, beta: float = 1.0) -> WirelessNetwork:
    xy = rng.uniform(0.0, side, (n, 2))
    return WirelessNetwork(tuple(Point2(float(x), float(y)) for x, y in xy), alpha, beta)


def near_unit_pair(net: WirelessNetwork, tol: float = 1e-9) -> bool:
    return any(abs(dist(a, b) - 1.0) <= tol for a, b in combinations(net.stations, 2))


def check_udg_correspondence(networks: int, rng: np.random.Generator) -> CheckResult:
    bad = tested = 0
    while tested < networks:
        net = random_network(rng, int(rng.integers(2, 9)))
        if near_unit_pair(net):
            continue
        tested += 1
        pairs = {e for e in generate_hypergraph(net).sorted_edges() if len(e) == 2}
        bad += pairs != set(unit_disk_graph(net.stations).sorted_edges())
    return CheckResult("udg-correspondence", bad == 0, f"{tested - bad}/{tested} networks agree")


def check_scaling_invariance(networks: int, rng: np.random.Generator) -> CheckResult:
    bad = 0
    for _ in range(networks):
        net = random_network(rng, int(rng.integers(2, 9)), beta=float(rng.uniform(0.2, 5.0)))
        base = generate_hypergraph(net).sorted_edges()
        rho = float(rng.uniform(0.25, 4.0))
        bad += generate_hypergraph(scale_network(net, rho)).sorted_edges() != base
        bad += generate_hypergraph(normalize_beta(net)).sorted_edges() != base
    return CheckResult("scaling-invariance", bad == 0, f"{2 * networks - bad}/{2 * networks} rescaled networks agree")


def check_k15_sweep(trials: int, seed: int, grid_points: int) -> CheckResult:
    report = verify_k15_nonrealizable(trials, seed, grid_points=grid_points)
    return CheckResult(
        "k15-contradiction",
        report["all_contradicted"],
        f"{report['contradicted']}/{report['total']} contradicted "
        f"({report['pair_forbidden']} pair, {report['triple_forbidden']} triple), "
        f"min triple energy {report['triple_energy_min']:.6g}; {report['note']}",
    )


def run_all(trials: int = 2000, grid_points: int = 1001, seed: int = 0) -> List[CheckResult]:
    rng = np.random.default_rng(seed)
    n_random = max(1, min(trials, 200))
    steps: List[Callable[[], CheckResult]] = [
        lambda: check_example_k14(),
        lambda: check_udg_correspondence(n_random, rng),
        lambda: check_scaling_invariance(n_random, rng),
        lambda: check_sector_diameter(trials, rng),
        lambda: check_radial_projection(trials, rng),
        lambda: check_g_minimum(grid_points),
        lambda: check_k15_sweep(trials, seed, grid_points),
    ]
    return [step() for step in steps]
