"""Pure-Python bitmask kernels.

Every function takes ``n`` and ``adj``, where ``adj[v]`` is an int whose bit
``u`` is set iff ``uv`` is an edge. There is no size limit; the compiled
twin in ``_ckernels`` implements the same signatures for ``n <= 64``.
"""

from __future__ import annotations

from typing import Sequence

Adj = Sequence[int]


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def components(n: int, adj: Adj, within: int = -1) -> list[int]:
    """Vertex masks of the connected components of ``G[within]``, by lowest vertex."""
    todo = ((1 << n) - 1) & within
    out = []
    while todo:
        low = todo & -todo
        comp = low
        frontier = low
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            fresh = adj[v] & todo & ~comp
            comp |= fresh
            frontier |= fresh
        todo &= ~comp
        out.append(comp)
    return out


def is_connected(n: int, adj: Adj) -> bool:
    return len(components(n, adj)) == 1


def odd_even_counts(n: int, adj: Adj, removed: int) -> tuple[int, int]:
    odd = even = 0
    for comp in components(n, adj, ~removed):
        if bin(comp).count("1") & 1:
            odd += 1
        else:
            even += 1
    return odd, even


def find_claw(n: int, adj: Adj):
    """First ``(center, a, b, c)`` with ``a < b < c`` pairwise non-adjacent, or None."""
    for v in range(n):
        nb = adj[v]
        for a in _bits(nb):
            rest_a = nb & ~adj[a] & ~((2 << a) - 1)
            for b in _bits(rest_a):
                rest_b = rest_a & ~adj[b] & ~((2 << b) - 1)
                if rest_b:
                    return v, a, b, (rest_b & -rest_b).bit_length() - 1
    return None


def find_independent_triple(n: int, adj: Adj):
    """Lexicographically first independent 3-set (a triangle of the complement)."""
    full = (1 << n) - 1
    for a in range(n):
        non_a = full & ~adj[a] & ~((2 << a) - 1)
        for b in _bits(non_a):
            common = non_a & ~adj[b] & ~((2 << b) - 1)
            if common:
                return a, b, (common & -common).bit_length() - 1
    return None


def find_bad_triple(n: int, adj: Adj):
    """First independent triple whose removal leaves fewer than two odd components."""
    full = (1 << n) - 1
    for a in range(n):
        non_a = full & ~adj[a] & ~((2 << a) - 1)
        for b in _bits(non_a):
            for c in _bits(non_a & ~adj[b] & ~((2 << b) - 1)):
                odd, _ = odd_even_counts(n, adj, (1 << a) | (1 << b) | (1 << c))
                if odd < 2:
                    return a, b, c
    return None


def matching_profile(n: int, adj: Adj, limit: int, early_exit: bool = False):
    """Enumerate maximal matchings by branching on the lowest free vertex.

    Returns ``(count, sizes_mask, min_pairs, max_pairs)`` where ``sizes_mask``
    has bit ``k`` set iff some maximal matching has ``k`` edges; ``min_pairs``
    and ``max_pairs`` are the first matchings found of the smallest and
    largest size. ``count`` is -1 when more than ``limit`` matchings exist.
    With ``early_exit`` the search stops once two sizes have been seen.
    """
    state = {"count": 0, "sizes": 0, "min": None, "max": None, "stop": False}
    pairs: list[tuple[int, int]] = []

    def leaf(free: int, exposed: int) -> None:
        left = exposed | free
        for w in _bits(free):
            if adj[w] & left:
                return
        state["count"] += 1
        k = len(pairs)
        state["sizes"] |= 1 << k
        if state["min"] is None or k < len(state["min"]):
            state["min"] = tuple(pairs)
        if state["max"] is None or k > len(state["max"]):
            state["max"] = tuple(pairs)
        if state["count"] > limit or (early_exit and state["sizes"] & (state["sizes"] - 1)):
            state["stop"] = True

    def search(free: int, exposed: int) -> None:
        rest = free
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            if adj[v] & free:
                break
        else:
            leaf(free, exposed)
            return
        for u in _bits(adj[v] & free):
            pairs.append((v, u))
            search(free & ~((1 << v) | (1 << u)), exposed)
            pairs.pop()
            if state["stop"]:
                return
        if not adj[v] & exposed:
            search(free & ~(1 << v), exposed | (1 << v))

    search((1 << n) - 1, 0)
    count = -1 if state["count"] > limit else state["count"]
    return count, state["sizes"], state["min"], state["max"]


def vertex_connectivity(n: int, adj: Adj, cap: int):
    """Smallest vertex cut of size at most ``cap``; None if there is none.

    Disconnected graphs and graphs on at most one vertex give 0; the complete
    graph ``K_n`` gives ``n - 1`` when that does not exceed ``cap``.
    """
    if n <= 1 or not is_connected(n, adj):
        return 0
    full = (1 << n) - 1

    def cuts(size: int, start: int, removed: int) -> bool:
        if size == 0:
            left = full & ~removed
            return left != 0 and len(components(n, adj, left)) > 1
        for v in range(start, n - size + 1):
            if cuts(size - 1, v + 1, removed | (1 << v)):
                return True
        return False

    for k in range(1, min(cap, n - 2) + 1):
        if cuts(k, 0, 0):
            return k
    if all(adj[v] | (1 << v) == full for v in range(n)):
        return n - 1 if n - 1 <= cap else None
    return None
