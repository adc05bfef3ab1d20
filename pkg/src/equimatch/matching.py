"""Matchings: maximal-matching enumeration, Edmonds' maximum matching and
the randomly-matchable / factor-critical predicates."""

from __future__ import annotations

from collections import deque
from typing import Iterable, Iterator

from . import kernels
from .graph import Graph, complete_bipartite, complete_graph, is_connected
from .isomorphism import are_isomorphic

Matching = tuple[tuple[int, int], ...]

DEFAULT_LIMIT = 10**6


class MatchingOverflow(RuntimeError):
    """More maximal matchings than the enumeration limit allows."""

    def __init__(self, limit: int):
        super().__init__(f"more than {limit} maximal matchings; use the structural criterion")
        self.limit = limit


def normalize(pairs: Iterable[tuple[int, int]]) -> Matching:
    return tuple(sorted((min(u, v), max(u, v)) for u, v in pairs))


def is_matching(g: Graph, pairs: Iterable[tuple[int, int]]) -> bool:
    seen = 0
    for u, v in pairs:
        if not g.has_edge(u, v) or (seen >> u & 1) or (seen >> v & 1):
            return False
        seen |= (1 << u) | (1 << v)
    return True


def saturated(pairs: Iterable[tuple[int, int]]) -> int:
    m = 0
    for u, v in pairs:
        m |= (1 << u) | (1 << v)
    return m


def is_maximal_matching(g: Graph, pairs: Iterable[tuple[int, int]]) -> bool:
    pairs = list(pairs)
    if not is_matching(g, pairs):
        return False
    exposed = ((1 << g.n) - 1) & ~saturated(pairs)
    return all(g.adj[v] & exposed == 0 for v in range(g.n) if exposed >> v & 1)


def iter_maximal_matchings(g: Graph) -> Iterator[Matching]:
    """Every maximal matching exactly once.

    Branches on the lowest free vertex ``v`` that still has a free
    neighbour: match ``v`` to each such neighbour in turn, or leave ``v``
    exposed, which is only kept if no exposed neighbour exists and all of
    its neighbours end up matched.
    """
    adj = g.adj
    pairs: list[tuple[int, int]] = []

    def search(free: int, exposed: int) -> Iterator[Matching]:
        rest = free
        v = -1
        while rest:
            w = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[w] & free:
                v = w
                break
        if v < 0:
            left = exposed | free
            if all(adj[w] & left == 0 for w in range(g.n) if free >> w & 1):
                yield normalize(pairs)
            return
        nb = adj[v] & free
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            pairs.append((v, u))
            yield from search(free & ~((1 << v) | (1 << u)), exposed)
            pairs.pop()
        if not adj[v] & exposed:
            yield from search(free & ~(1 << v), exposed | (1 << v))

    yield from search((1 << g.n) - 1, 0)


def enumerate_maximal_matchings(g: Graph, limit: int = DEFAULT_LIMIT) -> list[Matching]:
    if limit < 1:
        raise ValueError("limit must be at least 1")
    out = []
    for mm in iter_maximal_matchings(g):
        out.append(mm)
        if len(out) > limit:
            raise MatchingOverflow(limit)
    return out


def matching_sizes(g: Graph, limit: int = DEFAULT_LIMIT) -> set[int]:
    """Set of cardinalities of maximal matchings (kernel-backed)."""
    count, sizes, _, _ = kernels.matching_profile(g.n, g.adj, limit, False)
    if count < 0:
        raise MatchingOverflow(limit)
    return {k for k in range(g.n // 2 + 1) if sizes >> k & 1}


def maximum_matching(g: Graph) -> Matching:
    """A maximum-cardinality matching via Edmonds' blossom algorithm.

    Classic O(n^3) formulation: grow an alternating BFS forest from each
    exposed vertex, contracting odd cycles through base pointers.
    """
    n = g.n
    nbrs = [g.neighbors(v) for v in range(n)]
    match = [-1] * n

    # greedy start
    for v in range(n):
        if match[v] < 0:
            for u in nbrs[v]:
                if match[u] < 0:
                    match[v], match[u] = u, v
                    break

    def augment_from(root: int) -> bool:
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        queue = deque([root])

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if match[a] < 0:
                    break
                a = parent[match[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[match[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[match[v]]] = True
                parent[v] = child
                child = match[v]
                v = parent[match[v]]

        while queue:
            v = queue.popleft()
            for u in nbrs[v]:
                if base[v] == base[u] or match[v] == u:
                    continue
                if u == root or (match[u] >= 0 and parent[match[u]] >= 0):
                    cur = lca(v, u)
                    blossom = [False] * n
                    mark_path(v, cur, u, blossom)
                    mark_path(u, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[u] < 0:
                    parent[u] = v
                    if match[u] < 0:
                        while u >= 0:
                            pv = parent[u]
                            nxt = match[pv]
                            match[u], match[pv] = pv, u
                            u = nxt
                        return True
                    used[match[u]] = True
                    queue.append(match[u])
        return False

    for v in range(n):
        if match[v] < 0:
            augment_from(v)
    return normalize((v, match[v]) for v in range(n) if match[v] > v)


def has_perfect_matching(g: Graph) -> bool:
    return g.n % 2 == 0 and 2 * len(maximum_matching(g)) == g.n


def is_randomly_matchable(g: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    """Every maximal matching is perfect (checked by enumeration)."""
    if g.n % 2:
        return False
    count, sizes, _, _ = kernels.matching_profile(g.n, g.adj, limit, True)
    if count < 0:
        raise MatchingOverflow(limit)
    return sizes == 1 << (g.n // 2)


def is_randomly_matchable_structural(g: Graph) -> bool:
    """Connected graph isomorphic to ``K_2p`` or ``K_p,p`` (p >= 1)."""
    if g.n == 0 or g.n % 2 or not is_connected(g):
        return False
    p = g.n // 2
    return are_isomorphic(g, complete_graph(g.n)) or are_isomorphic(g, complete_bipartite(p, p))


def is_factor_critical(g: Graph) -> bool:
    if g.n % 2 == 0:
        return False
    for u in range(g.n):
        h, _ = g.remove([u])
        if not has_perfect_matching(h):
            return False
    return True
