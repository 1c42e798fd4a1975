"""Realizability of hypergraphs by wireless networks.

Two tools live here: a randomized local search that tries to place stations
so that a target hypergraph is generated, and a step-by-step certificate
showing that five pairwise-independent leaves around a common centre always
contain a forbidden triple (so K_{1,5} has no realization).
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .geometry import (
    G_HALF_WIDTH,
    Point2,
    PolarPoint,
    as_point,
    cart_to_polar,
    dist,
    minimize_g,
    radial_project,
)
from .hypergraph import Hypergraph, HypergraphError, TooLargeError, are_isomorphic
from .wireless import WirelessNetwork, generate_hypergraph, is_forbidden, normalize_beta

SEARCH_MAX_N = 8
SAMPLE_RADIUS = 2.0
FINAL_SCALE_RATIO = 0.01
# near jumps land within SAMPLE_RADIUS * NEAR_JUMP_RATIO of another station
NEAR_JUMP_RATIO = 0.6
PAIR_FORBIDDEN = "pair-forbidden"
TRIPLE_FORBIDDEN = "triple-forbidden"
EVIDENCE_NOTE = (
    "numerical evidence only: every sampled configuration was contradicted, "
    "which supports but does not prove that K_{1,5} is not realizable"
)


@dataclass(frozen=True)
class RealizationSearchConfig:
    restarts: int = 100
    local_steps: int = 3000
    step_scale: float = 0.3
    rng_seed: int = 0
    margin: float = 1e-6
    jump_prob: float = 0.3
    batch_size: int = 1024

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be at least 1")
        if self.local_steps < 0:
            raise ValueError("local_steps must be nonnegative")
        if self.margin < 0:
            raise ValueError("margin must be nonnegative")
        if not self.step_scale > 0:
            raise ValueError("step_scale must be positive")
        if not 0.0 <= self.jump_prob <= 1.0:
            raise ValueError("jump_prob must lie in [0, 1]")
        if self.batch_size < 1:
            raise ValueError("batch_size must be at least 1")


@dataclass(frozen=True)
class RealizationSearchResult:
    found: bool
    network: Optional[WirelessNetwork]
    best_mismatch: int
    trials_run: int

    def to_dict(self) -> dict:
        return {
            "found": self.found,
            "network": None if self.network is None else self.network.to_dict(),
            "best_mismatch": self.best_mismatch,
            "trials_run": self.trials_run,
        }


def check_realization(net: WirelessNetwork, target: Hypergraph) -> bool:
    """True iff ``net`` (after rescaling to beta = 1) generates a copy of ``target``."""
    if net.n != target.n:
        raise HypergraphError(f"network has {net.n} stations but target has {target.n} vertices")
    if target.n > SEARCH_MAX_N:
        raise TooLargeError(f"check_realization supports n <= {SEARCH_MAX_N}")
    generated = generate_hypergraph(normalize_beta(net), net.n)
    return are_isomorphic(generated, target)


def _subset_table(target: Hypergraph) -> Tuple[np.ndarray, np.ndarray]:
    """Indicator rows of every subset of size >= 2, with the target's forbidden flag."""
    n = target.n
    masks = target._masks
    rows, forbidden = [], []
    for k in range(2, n + 1):
        for W in combinations(range(n), k):
            m = sum(1 << v for v in W)
            row = np.zeros(n)
            row[list(W)] = 1.0
            rows.append(row)
            forbidden.append(any(e & m == e for e in masks))
    return np.array(rows).reshape(-1, n), np.array(forbidden, dtype=bool)


def mismatch(pos: np.ndarray, target: Hypergraph, alpha: float = 4.0, margin: float = 1e-6) -> np.ndarray:
    """Count, per placement, the subsets whose beta = 1 status differs from ``target``.

    ``pos`` has shape (batch, n, 2) or (n, 2). A subset whose peak received
    energy lies within ``margin`` of the threshold always counts.
    """
    pos = np.asarray(pos, dtype=float)
    single = pos.ndim == 2
    rows, target_forbidden = _subset_table(target)
    out = _mismatch(pos[None] if single else pos, rows, target_forbidden, alpha, margin)
    return int(out[0]) if single else out


def _mismatch(pos: np.ndarray, rows: np.ndarray, target_forbidden: np.ndarray, alpha: float, margin: float) -> np.ndarray:
    diff = pos[:, :, None, :] - pos[:, None, :, :]
    d2 = np.einsum("bijk,bijk->bij", diff, diff)
    np.maximum(d2, 1e-24, out=d2)
    gain = 1.0 / (d2 * d2) if alpha == 4.0 else d2 ** (-alpha / 2)
    n = pos.shape[1]
    gain[:, np.arange(n), np.arange(n)] = 0.0
    received = np.matmul(rows, gain)
    received *= rows
    peak = received.max(axis=2)
    forbidden = peak >= 1.0
    dead = np.abs(peak - 1.0) < margin
    return ((forbidden != target_forbidden) | dead).sum(axis=1)


def _disk_points(rng: np.random.Generator, size) -> np.ndarray:
    r = SAMPLE_RADIUS * np.sqrt(rng.random(size))
    t = rng.uniform(-math.pi, math.pi, size)
    return np.stack([r * np.cos(t), r * np.sin(t)], axis=-1)


def _restart_streams(cfg: RealizationSearchConfig, start: int, stop: int, n: int):
    """Initial placement and move schedule for restarts ``start..stop-1``.

    Each restart draws from its own generator keyed on (seed, restart index),
    so results do not depend on batching or thread scheduling.
    """
    steps = cfg.local_steps
    B = stop - start
    init = np.empty((B, n, 2))
    who = np.empty((B, steps), dtype=np.int64)
    noise = np.empty((B, steps, 2))
    kind = np.empty((B, steps), dtype=np.int8)
    anchor = np.empty((B, steps), dtype=np.int64)
    fresh = np.empty((B, steps, 2))
    for b, idx in enumerate(range(start, stop)):
        rng = np.random.default_rng([cfg.rng_seed, idx])
        init[b] = _disk_points(rng, n)
        who[b] = rng.integers(0, n, steps)
        noise[b] = rng.standard_normal((steps, 2))
        u = rng.random(steps)
        # 0: Gaussian step, 1: uniform redraw in the disk, 2: jump near another station
        kind[b] = np.where(u < cfg.jump_prob / 2, 1, np.where(u < cfg.jump_prob, 2, 0))
        anchor[b] = rng.integers(0, n, steps)
        fresh[b] = _disk_points(rng, steps)
    return init, who, noise, kind, anchor, fresh


def _kernel_tables(target: Hypergraph):
    rows, target_forbidden = _subset_table(target)
    n = target.n
    sizes = rows.sum(axis=1).astype(np.int64)
    members = np.zeros((len(rows), n), dtype=np.int64)
    for s, row in enumerate(rows):
        idx = np.flatnonzero(row)
        members[s, : len(idx)] = idx
    n_subsets_of = rows.sum(axis=0).astype(np.int64)
    subsets_of = np.zeros((n, max(int(n_subsets_of.max(initial=0)), 1)), dtype=np.int64)
    for v in range(n):
        idx = np.flatnonzero(rows[:, v])
        subsets_of[v, : len(idx)] = idx
    return members, sizes, subsets_of, n_subsets_of, target_forbidden


def search_realization(target: Hypergraph, cfg: RealizationSearchConfig = RealizationSearchConfig(), alpha: float = 4.0) -> RealizationSearchResult:
    """Randomized search for a beta = 1 placement that generates ``target``.

    Every restart samples the stations uniformly in a disk of radius 2 and then
    repeatedly moves one random station, keeping the move when the mismatch
    count does not increase. A move is a Gaussian step whose size decays
    geometrically from ``step_scale`` to 1% of it or, with probability
    ``jump_prob``, a jump to a fresh point (uniform in the disk, or near another
    station). The jumps let a station cross the plateaus of the integer
    mismatch count. The returned network comes from the lowest-indexed
    successful restart, independent of ``batch_size``.
    """
    from . import _search_kernel

    n = target.n
    if n > SEARCH_MAX_N:
        raise TooLargeError(f"search_realization supports n <= {SEARCH_MAX_N}")
    if n < 1:
        raise HypergraphError("target must have at least one vertex")
    rows, target_forbidden = _subset_table(target)
    members, sizes, subsets_of, n_subsets_of, tf = _kernel_tables(target)
    steps = cfg.local_steps
    scales = cfg.step_scale * FINAL_SCALE_RATIO ** (np.arange(steps) / max(steps - 1, 1))

    best_overall = None
    best_pos = None
    for start in range(0, cfg.restarts, cfg.batch_size):
        stop = min(start + cfg.batch_size, cfg.restarts)
        init, who, noise, kind, anchor, fresh = _restart_streams(cfg, start, stop, n)
        if len(rows):
            _, pos = _search_kernel.descend_batch(
                init, who, noise, kind, anchor, fresh, scales, members, sizes, subsets_of,
                n_subsets_of, tf, cfg.margin, float(alpha), NEAR_JUMP_RATIO,
            )
        else:
            pos = init
        # recount from scratch: the kernel's incremental sums can drift by rounding
        cur = _mismatch(pos, rows, target_forbidden, alpha, cfg.margin) if len(rows) else np.zeros(len(pos), int)

        for h in np.flatnonzero(cur == 0):
            net = WirelessNetwork(tuple(Point2(float(x), float(y)) for x, y in pos[h]), alpha, 1.0)
            if check_realization(net, target):
                return RealizationSearchResult(True, net, 0, start + int(h) + 1)
        k = int(np.argmin(cur))
        if best_overall is None or cur[k] < best_overall:
            best_overall, best_pos = int(cur[k]), pos[k].copy()

    net = None
    if best_pos is not None and _distinct(best_pos):
        net = WirelessNetwork(tuple(Point2(float(x), float(y)) for x, y in best_pos), alpha, 1.0)
    return RealizationSearchResult(False, net, best_overall, cfg.restarts)


def _distinct(pos: np.ndarray) -> bool:
    return all(np.any(pos[i] != pos[j]) for i, j in combinations(range(len(pos)), 2))


# --- K_{1,5} certificate -------------------------------------------------------


@dataclass(frozen=True)
class K15Certificate:
    """Forbidden triple among five leaves pushed out to the unit circle.

    ``projected_points`` are in counterclockwise angular order and
    ``gap_angles[k]`` is the angle from point k to point k+1 (cyclically).
    ``chosen_triple`` holds input indices (previous, middle, next); the middle
    station receives ``triple_energy`` from the other two.
    """

    projected_points: Tuple[PolarPoint, ...]
    gap_angles: Tuple[float, ...]
    chosen_triple: Tuple[int, int, int]
    gap_excess_sum: float
    triple_energy: float

    def to_dict(self) -> dict:
        d = asdict(self)
        d["projected_points"] = [[p.r, p.theta] for p in self.projected_points]
        return d


def center_energy(gap_before: float, gap_after: float) -> float:
    """Energy at a unit-circle point from its two neighbours at the given angular gaps."""
    return (2 * math.sin(gap_before / 2)) ** -4 + (2 * math.sin(gap_after / 2)) ** -4


def k15_witness(points: Sequence) -> K15Certificate:
    """Certify that five mutually far points of the punctured unit ball hold a forbidden triple.

    Raises ``ValueError`` when a point is at the origin or outside the ball, or
    when two points are within distance 1 of each other.
    """
    pts = [as_point(p) for p in points]
    if len(pts) != 5:
        raise ValueError(f"expected 5 points, got {len(pts)}")
    for i, j in combinations(range(5), 2):
        if dist(pts[i], pts[j]) <= 1.0:
            raise ValueError(f"points {i} and {j} are within distance 1")
    projected = radial_project(pts)  # raises on origin / outside ball
    polar = [cart_to_polar(p) for p in projected]
    order = sorted(range(5), key=lambda i: polar[i].theta)
    angles = [polar[i].theta for i in order]
    gaps = [(angles[(k + 1) % 5] - angles[k]) % (2 * math.pi) for k in range(5)]

    # excess of each gap over 60 degrees; the five excesses sum to pi/3, so some
    # adjacent pair sums to at most 2*pi/15
    pair_sums = [gaps[k - 1] + gaps[k] - 2 * math.pi / 3 for k in range(5)]
    k = min(range(5), key=pair_sums.__getitem__)
    prev, mid, nxt = order[k - 1], order[k], order[(k + 1) % 5]
    e = dist(projected[mid], projected[prev]) ** -4 + dist(projected[mid], projected[nxt]) ** -4
    return K15Certificate(
        projected_points=tuple(polar[i] for i in order),
        gap_angles=tuple(gaps),
        chosen_triple=(prev, mid, nxt),
        gap_excess_sum=pair_sums[k],
        triple_energy=e,
    )


def classify_k15_configuration(points: Sequence):
    """Return ``(class, detail)`` showing why five leaves cannot all be independent.

    ``detail`` is the offending index pair for pair-forbidden configurations and
    a :class:`K15Certificate` otherwise.
    """
    pts = [as_point(p) for p in points]
    for i, j in combinations(range(len(pts)), 2):
        if dist(pts[i], pts[j]) <= 1.0:
            return PAIR_FORBIDDEN, (i, j)
    return TRIPLE_FORBIDDEN, k15_witness(pts)


def sample_punctured_ball(rng: np.random.Generator, count: int = 5) -> List[Point2]:
    """Area-uniform points in the unit ball, excluding the origin."""
    out = []
    while len(out) < count:
        u = rng.random()
        if u == 0.0:
            continue
        r, t = math.sqrt(u), rng.uniform(-math.pi, math.pi)
        out.append(Point2(r * math.cos(t), r * math.sin(t)))
    return out


def sample_qualifying_five(rng: np.random.Generator, min_radius: float = 0.8) -> List[Point2]:
    """Five points of the punctured unit ball with all pairwise distances above 1.

    Angular gaps are pi/3 plus Dirichlet-distributed excesses, radii are uniform
    on [min_radius, 1]; draws that violate the distance condition are rejected.
    """
    while True:
        excess = rng.dirichlet(np.ones(5)) * (math.pi / 3)
        theta = rng.uniform(-math.pi, math.pi) + np.cumsum(math.pi / 3 + excess)
        r = rng.uniform(min_radius, 1.0, 5)
        pts = [Point2(float(a * math.cos(b)), float(a * math.sin(b))) for a, b in zip(r, theta)]
        if all(dist(pts[i], pts[j]) > 1.0 for i, j in combinations(range(5), 2)):
            return pts


def _leaves_forbidden(points: Sequence[Point2]) -> bool:
    # brute-force oracle: some subset of the leaves is forbidden at beta = 1
    net = WirelessNetwork(tuple(points), 4.0, 1.0)
    return is_forbidden(net, range(len(points))) is not None


def verify_k15_nonrealizable(
    trials: int,
    rng_seed: int = 0,
    qualifying_trials: Optional[int] = None,
    grid_points: int = 1001,
    configurations: Optional[Sequence[Sequence]] = None,
) -> dict:
    """Sweep random leaf placements and confirm each one contradicts K_{1,5}.

    With the centre at the origin and beta = 1, the five leaves lie in the
    punctured unit ball. Each trial is classified as pair-forbidden or
    triple-forbidden. Uniform placements almost never have all pairwise
    distances above 1, so ``qualifying_trials`` (default ``trials``) further
    placements are drawn from that regime to exercise the triple certificate.
    ``configurations``, when given, replaces the uniform sweep.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if qualifying_trials is None:
        qualifying_trials = trials

    if configurations is None:
        configs = [sample_punctured_ball(np.random.default_rng([rng_seed, t])) for t in range(trials)]
    else:
        configs = [[as_point(p) for p in c] for c in configurations]
    qrng = np.random.default_rng([rng_seed, 1 << 32])
    qualifying = [sample_qualifying_five(qrng) for _ in range(qualifying_trials)]

    counts = {PAIR_FORBIDDEN: 0, TRIPLE_FORBIDDEN: 0}
    energies: List[float] = []
    excess: List[float] = []
    oracle_agrees = 0
    for pts in [*configs, *qualifying]:
        cls, detail = classify_k15_configuration(pts)
        counts[cls] += 1
        if cls == TRIPLE_FORBIDDEN:
            energies.append(detail.triple_energy)
            excess.append(detail.gap_excess_sum)
        oracle_agrees += _leaves_forbidden(pts)

    total = len(configs) + len(qualifying)
    _, g_star = minimize_g(grid_points)
    certificates_ok = all(e > 1.0 for e in energies) and all(x <= 2 * G_HALF_WIDTH + 1e-9 for x in excess)
    contradicted = counts[PAIR_FORBIDDEN] + counts[TRIPLE_FORBIDDEN]
    return {
        "trials": len(configs),
        "qualifying_trials": len(qualifying),
        "total": total,
        "pair_forbidden": counts[PAIR_FORBIDDEN],
        "triple_forbidden": counts[TRIPLE_FORBIDDEN],
        "contradicted": contradicted,
        "bruteforce_forbidden": oracle_agrees,
        "all_contradicted": contradicted == total and oracle_agrees == total and certificates_ok,
        "triple_energy_min": min(energies) if energies else None,
        "triple_energy_mean": float(np.mean(energies)) if energies else None,
        "max_gap_excess_sum": max(excess) if excess else None,
        "g_grid_min": g_star,
        "config": {"trials": trials, "qualifying_trials": qualifying_trials, "rng_seed": rng_seed, "grid_points": grid_points},
        "note": EVIDENCE_NOTE,
    }
