"""Graph sources for the verification harness.

Labeled graphs come straight from adjacency codes. Isomorphism classes
of connected graphs are grown one vertex at a time: every connected
graph has a vertex whose removal keeps it connected, so extending each
connected (n-1)-class by a new vertex with every non-empty neighbourhood
reaches every connected n-class. Hereditary properties (claw-freeness)
can be imposed at each level.
"""

from __future__ import annotations

import random
from typing import Callable, Iterator

from . import kernels
from .graph import Graph


def labeled_codes(n: int) -> range:
    return range(1 << (n * (n - 1) // 2))


def labeled_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All ``2^(n choose 2)`` labeled graphs on ``n`` vertices, by code."""
    for code in labeled_codes(n):
        g = Graph.from_code(n, code)
        if connected_only and not kernels.is_connected(n, g.adj):
            continue
        yield g


# -- isomorphism classes ------------------------------------------------------------

def _refine(adj: tuple[int, ...], n: int) -> list[int]:
    """Colour refinement seeded with degree and triangle count, run to a
    stable partition. Colours are indices into a palette of sorted
    signatures, so they are invariant under isomorphism."""
    nbrs = [[u for u in range(n) if adj[v] >> u & 1] for v in range(n)]
    colors = [(len(nbrs[v]), sum(bin(adj[v] & adj[u]).count("1") for u in nbrs[v])) for v in range(n)]
    classes = len(set(colors))
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        colors = [palette[s] for s in sig]
        if len(palette) == classes:
            return colors
        classes = len(palette)


def _search_order(adj: tuple[int, ...], n: int, colors: list[int]) -> list[int]:
    size = {}
    for c in colors:
        size[c] = size.get(c, 0) + 1
    order: list[int] = []
    placed = 0
    while len(order) < n:
        v = min((u for u in range(n) if not placed >> u & 1),
                key=lambda u: (-bin(adj[u] & placed).count("1"), size[colors[u]], u))
        order.append(v)
        placed |= 1 << v
    return order


def _colored_iso(g_adj, order, g_col, h_adj, by_color) -> bool:
    """Is there a colour-preserving isomorphism? ``by_color`` maps each
    colour to the target vertices carrying it."""
    n = len(order)
    phi = [0] * len(g_adj)

    def extend(i: int, used: int) -> bool:
        if i == n:
            return True
        v = order[i]
        gv = g_adj[v]
        for w in by_color[g_col[v]]:
            if used >> w & 1:
                continue
            hw = h_adj[w]
            for j in range(i):
                u = order[j]
                if (gv >> u & 1) != (hw >> phi[u] & 1):
                    break
            else:
                phi[v] = w
                if extend(i + 1, used | 1 << w):
                    return True
        return False

    return extend(0, 0)


class ClassStore:
    """Set of graphs up to isomorphism, bucketed by a refinement invariant."""

    def __init__(self) -> None:
        self._buckets: dict[tuple, list[tuple[tuple[int, ...], dict]]] = {}
        self.graphs: list[Graph] = []

    def add(self, g: Graph) -> bool:
        n, adj = g.n, g.adj
        colors = _refine(adj, n)
        key = (n, sum(bin(a).count("1") for a in adj), tuple(sorted(colors)))
        bucket = self._buckets.setdefault(key, [])
        if bucket:
            order = _search_order(adj, n, colors)
            for h_adj, by_color in bucket:
                if _colored_iso(adj, order, colors, h_adj, by_color):
                    return False
        by_color: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            by_color.setdefault(c, []).append(v)
        bucket.append((adj, by_color))
        self.graphs.append(g)
        return True

    def __len__(self) -> int:
        return len(self.graphs)


def _extend(g: Graph) -> Iterator[Graph]:
    n = g.n
    for nb in range(1, 1 << n):
        adj = list(g.adj)
        for u in range(n):
            if nb >> u & 1:
                adj[u] |= 1 << n
        adj.append(nb)
        yield Graph._trusted(n + 1, tuple(adj))


def connected_classes(
    max_n: int, keep: Callable[[Graph], bool] | None = None
) -> dict[int, list[Graph]]:
    """Representatives of every connected isomorphism class on ``1..max_n``
    vertices. ``keep`` must be hereditary on connected induced subgraphs
    obtained by deleting a non-cut vertex (claw-freeness qualifies)."""
    out = {1: [Graph(1)]}
    for n in range(2, max_n + 1):
        store = ClassStore()
        for g in out[n - 1]:
            for h in _extend(g):
                if keep is None or keep(h):
                    store.add(h)
        out[n] = store.graphs
    return out


def claw_free(g: Graph) -> bool:
    return kernels.find_claw(g.n, g.adj) is None


# -- random connected claw-free graphs ------------------------------------------------

def claw_free_chain(n: int, samples: int, seed: int, thin: int = 7) -> Iterator[Graph]:
    """Seeded edge-flip Markov chain over connected claw-free graphs on
    ``n`` vertices.

    Starts from a path, proposes flipping a uniform random vertex pair and
    rejects proposals that leave the class. One graph is emitted every
    ``thin`` proposals. The chain is symmetric, so its limit is uniform on
    the reachable labeled graphs.
    """
    if n < 2:
        raise ValueError("chain needs at least two vertices")
    rng = random.Random(seed)
    adj = [0] * n
    for v in range(n - 1):
        adj[v] |= 1 << (v + 1)
        adj[v + 1] |= 1 << v
    for _ in range(samples):
        for _ in range(thin):
            u, v = rng.sample(range(n), 2)
            adj[u] ^= 1 << v
            adj[v] ^= 1 << u
            if kernels.find_claw(n, adj) is not None or not kernels.is_connected(n, adj):
                adj[u] ^= 1 << v
                adj[v] ^= 1 << u
        yield Graph._trusted(n, tuple(adj))


def random_graph(n: int, rng: random.Random, density: float | None = None) -> Graph:
    """Erdős–Rényi graph; density drawn uniformly when not given."""
    p = rng.random() if density is None else density
    adj = [0] * n
    for j in range(1, n):
        for i in range(j):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph._trusted(n, tuple(adj))
