"""Hypergraphs on a ground set {0, ..., n-1} and their interference degree.

Edges are stored as frozensets and mirrored as integer bitmasks; every search
below works on the bitmasks. Interference-degree values are exact
:class:`fractions.Fraction` instances.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

SIGMA_MAX_N = 20
ALPHA_MAX_N = 24
ISO_MAX_N = 10

Edge = FrozenSet[int]


class HypergraphError(ValueError):
    """Invalid hypergraph input (undersized edge, bad vertex index, ...)."""


class TooLargeError(HypergraphError):
    """The exhaustive search bound for an operation was exceeded."""


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


@dataclass(frozen=True)
class Hypergraph:
    """Immutable Sperner hypergraph. Build through :func:`normalize`."""

    n: int
    edges: FrozenSet[Edge]
    _masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise HypergraphError("vertex count must be nonnegative")
        for e in self.edges:
            if len(e) < 2:
                raise HypergraphError(f"edge {sorted(e)} has fewer than 2 vertices")
            if any(not 0 <= v < self.n for v in e):
                raise HypergraphError(f"edge {sorted(e)} has a vertex outside 0..{self.n - 1}")
        object.__setattr__(self, "_masks", tuple(_mask(e) for e in self.sorted_edges()))

    def sorted_edges(self) -> List[Tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def is_uniform(self, r: int) -> bool:
        return all(len(e) == r for e in self.edges)

    def to_dict(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "Hypergraph":
        try:
            n = int(data["n"])
            edges = [[int(v) for v in e] for e in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise HypergraphError(f"malformed hypergraph JSON: {exc}") from exc
        return normalize(edges, n)

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphError(f"malformed hypergraph JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise HypergraphError("hypergraph JSON must be an object")
        return cls.from_dict(data)


# A graph is a 2-uniform hypergraph; the alias keeps signatures readable.
Graph = Hypergraph


def normalize(edges: Iterable[Iterable[int]], n: Optional[int] = None) -> Hypergraph:
    """Build a Sperner hypergraph, dropping every edge that contains another edge.

    ``n`` defaults to one more than the largest vertex mentioned.
    """
    sets = set()
    for e in edges:
        fe = frozenset(int(v) for v in e)
        if len(fe) < 2:
            raise HypergraphError(f"edge {sorted(fe)} has fewer than 2 vertices")
        sets.add(fe)
    if n is None:
        n = 1 + max((max(e) for e in sets), default=-1)
    # Shorter edges first: a kept edge can only be a superset of an earlier one.
    kept: List[Edge] = []
    for e in sorted(sets, key=lambda s: (len(s), sorted(s))):
        if not any(k <= e for k in kept):
            kept.append(e)
    return Hypergraph(n, frozenset(kept))


def make_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    g = normalize(edges, n)
    if not g.is_uniform(2):
        raise HypergraphError("graph edges must have exactly 2 vertices")
    return g


def _check_vertex(H: Hypergraph, v: int) -> None:
    if not 0 <= v < H.n:
        raise HypergraphError(f"vertex {v} outside 0..{H.n - 1}")


def _contains_edge(masks: Sequence[int], w: int) -> bool:
    return any(m & w == m for m in masks)


def is_independent(H: Hypergraph, W: Iterable[int]) -> bool:
    W = list(W)
    for v in W:
        _check_vertex(H, v)
    return not _contains_edge(H._masks, _mask(W))


def neighbors(H: Hypergraph, i: int) -> FrozenSet[int]:
    """Vertices sharing at least one edge with ``i``."""
    _check_vertex(H, i)
    out = set()
    for e in H.edges:
        if i in e:
            out |= e
    out.discard(i)
    return frozenset(out)


def delta_weight(H: Hypergraph, i: int, j: int) -> Fraction:
    """Largest 1/(|E|-1) over edges E containing both i and j."""
    _check_vertex(H, i)
    _check_vertex(H, j)
    sizes = [len(e) for e in H.edges if i in e and j in e]
    if i == j or not sizes:
        raise HypergraphError(f"vertices {i} and {j} are not neighbours")
    return Fraction(1, min(sizes) - 1)


def _edges_through(masks: Sequence[int], n: int) -> List[List[int]]:
    by_vertex: List[List[int]] = [[] for _ in range(n)]
    for m in masks:
        for v in _bits(m):
            by_vertex[v].append(m)
    return by_vertex


def _max_independent_weight(
    candidates: Sequence[int],
    weights: Sequence[int],
    base: int,
    through: Sequence[Sequence[int]],
) -> int:
    """Max total integer weight of J within ``candidates`` with J | base independent.

    Independence is hereditary, so the search only ever extends independent sets.
    ``base`` must itself be independent.
    """
    k = len(candidates)
    # suffix sums give an upper bound for pruning
    tail = [0] * (k + 1)
    for t in range(k - 1, -1, -1):
        tail[t] = tail[t + 1] + weights[t]
    best = 0

    def extend(start: int, cur: int, total: int) -> None:
        nonlocal best
        if total > best:
            best = total
        for t in range(start, k):
            if total + tail[t] <= best:
                return
            v = candidates[t]
            nxt = cur | (1 << v)
            if any(m & nxt == m for m in through[v]):
                continue
            extend(t + 1, nxt, total + weights[t])

    extend(0, base, 0)
    return best


def vertex_deltas(H: Hypergraph, i: int) -> Tuple[Fraction, Fraction]:
    """Return (Delta'_i, Delta''_i) for vertex ``i``."""
    _check_vertex(H, i)
    nbrs = sorted(neighbors(H, i))
    if not nbrs:
        return Fraction(0), Fraction(1)
    w = [delta_weight(H, i, j) for j in nbrs]
    scale = lcm(*(x.denominator for x in w))
    iw = [int(x * scale) for x in w]
    through = _edges_through(H._masks, H.n)
    d1 = _max_independent_weight(nbrs, iw, 0, through)
    d2 = _max_independent_weight(nbrs, iw, 1 << i, through)
    return Fraction(d1, scale), 1 + Fraction(d2, scale)


def interference_degree(H: Hypergraph) -> Fraction:
    """Exact interference degree: max over vertices of Delta'_i and Delta''_i."""
    if H.n > SIGMA_MAX_N:
        raise TooLargeError(f"interference_degree supports n <= {SIGMA_MAX_N}, got {H.n}")
    if H.n == 0:
        raise HypergraphError("interference degree of an empty ground set is undefined")
    return max(max(vertex_deltas(H, i)) for i in range(H.n))


def independence_number(H: Hypergraph) -> int:
    if H.n > ALPHA_MAX_N:
        raise TooLargeError(f"independence_number supports n <= {ALPHA_MAX_N}, got {H.n}")
    through = _edges_through(H._masks, H.n)
    return _max_independent_weight(list(range(H.n)), [1] * H.n, 0, through)


def graph_interference_degree(G: Graph) -> int:
    """max over v of the independence number of the subgraph induced by v's neighbours."""
    if not G.is_uniform(2):
        raise HypergraphError("graph_interference_degree expects a 2-uniform hypergraph")
    if G.n > ALPHA_MAX_N:
        raise TooLargeError(f"graph_interference_degree supports n <= {ALPHA_MAX_N}, got {G.n}")
    adj = [0] * G.n
    for e in G.edges:
        a, b = tuple(e)
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    best = 0
    for v in range(G.n):
        nb = _bits(adj[v])
        through = [[(1 << u) | (1 << x) for x in _bits(adj[u] & adj[v])] for u in range(G.n)]
        best = max(best, _max_independent_weight(nb, [1] * len(nb), 0, through))
    return best


def augment_with_apex(G: Graph) -> Graph:
    """Add a new vertex ``n`` adjacent to every existing vertex."""
    if not G.is_uniform(2):
        raise HypergraphError("augment_with_apex expects a graph")
    apex = G.n
    return make_graph(G.n + 1, [*G.edges, *([v, apex] for v in range(G.n))])


def complete_uniform(n: int, r: int) -> Hypergraph:
    if not 2 <= r <= n:
        raise HypergraphError(f"complete_uniform needs 2 <= r <= n, got r={r}, n={n}")
    return Hypergraph(n, frozenset(frozenset(c) for c in combinations(range(n), r)))


def star(r: int) -> Graph:
    """K_{1,r} with centre 0 and leaves 1..r."""
    if r < 1:
        raise HypergraphError("a star needs at least one leaf")
    return make_graph(r + 1, [(0, i) for i in range(1, r + 1)])


def relabel(H: Hypergraph, perm: Sequence[int]) -> Hypergraph:
    """Image of H under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(H.n)):
        raise HypergraphError("relabel needs a permutation of the ground set")
    return Hypergraph(H.n, frozenset(frozenset(perm[v] for v in e) for e in H.edges))


def _vertex_profile(H: Hypergraph) -> List[Tuple[int, ...]]:
    prof: List[List[int]] = [[] for _ in range(H.n)]
    for e in H.edges:
        for v in e:
            prof[v].append(len(e))
    return [tuple(sorted(p)) for p in prof]


def are_isomorphic(H1: Hypergraph, H2: Hypergraph) -> bool:
    """Backtracking search for a vertex bijection carrying edges onto edges."""
    if max(H1.n, H2.n) > ISO_MAX_N:
        raise TooLargeError(f"are_isomorphic supports n <= {ISO_MAX_N}")
    if H1.n != H2.n or len(H1.edges) != len(H2.edges):
        return False
    p1, p2 = _vertex_profile(H1), _vertex_profile(H2)
    if sorted(p1) != sorted(p2):
        return False
    n = H1.n
    target = set(H2._masks)
    # Each H1 edge is checked as soon as its last vertex (in search order) is mapped.
    order = sorted(range(n), key=lambda v: (-len(p1[v]), v))
    pos = {v: k for k, v in enumerate(order)}
    closing: Dict[int, List[Edge]] = {v: [] for v in order}
    for e in H1.edges:
        closing[max(e, key=pos.__getitem__)].append(e)
    image = [-1] * n
    used = [False] * n

    def assign(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for u in range(n):
            if used[u] or p2[u] != p1[v]:
                continue
            image[v] = u
            if all(_mask(image[x] for x in e) in target for e in closing[v]):
                used[u] = True
                if assign(k + 1):
                    return True
                used[u] = False
        image[v] = -1
        return False

    return assign(0)
