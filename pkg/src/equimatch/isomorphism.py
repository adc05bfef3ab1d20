"""Brute-force isomorphism for tiny graphs.

Plain permutation backtracking with degree (and optional colour) pruning.
Good enough for the fixed base graphs, which have at most nine vertices.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graph import Graph, twin_reduce

MAX_VERTICES = 12


def _order(g: Graph) -> list[int]:
    # Extend along neighbours so earlier-mapped vertices constrain later ones.
    order: list[int] = []
    placed = 0
    deg = g.degrees()
    while len(order) < g.n:
        frontier = [v for v in range(g.n) if not placed >> v & 1 and g.adj[v] & placed]
        pool = frontier or [v for v in range(g.n) if not placed >> v & 1]
        v = max(pool, key=lambda u: (bin(g.adj[u] & placed).count("1"), deg[u], -u))
        order.append(v)
        placed |= 1 << v
    return order


def iter_isomorphisms(
    g: Graph,
    h: Graph,
    g_colors: Sequence | None = None,
    h_colors: Sequence | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield every isomorphism as a tuple ``phi`` with ``phi[v]`` in ``h``.

    Optional vertex colours must be preserved. No size gate; callers that
    face untrusted input should use :func:`isomorphic_small`.
    """
    n = g.n
    if n != h.n or g.m != h.m:
        return
    gd, hd = g.degrees(), h.degrees()
    gk = [(gd[v], g_colors[v] if g_colors is not None else None) for v in range(n)]
    hk = [(hd[v], h_colors[v] if h_colors is not None else None) for v in range(n)]
    if sorted(gk, key=repr) != sorted(hk, key=repr):
        return
    order = _order(g)
    candidates = [[w for w in range(n) if hk[w] == gk[v]] for v in order]
    phi = [-1] * n
    used = 0

    def extend(i: int) -> Iterator[tuple[int, ...]]:
        nonlocal used
        if i == n:
            yield tuple(phi)
            return
        v = order[i]
        gv = g.adj[v]
        for w in candidates[i]:
            if used >> w & 1:
                continue
            hw = h.adj[w]
            ok = True
            for j in range(i):
                u = order[j]
                if (gv >> u & 1) != (hw >> phi[u] & 1):
                    ok = False
                    break
            if not ok:
                continue
            phi[v] = w
            used |= 1 << w
            yield from extend(i + 1)
            used &= ~(1 << w)
            phi[v] = -1

    yield from extend(0)


def find_isomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    return next(iter_isomorphisms(g, h), None)


def _check_size(g: Graph, h: Graph) -> None:
    if g.n > MAX_VERTICES or h.n > MAX_VERTICES:
        raise ValueError(f"isomorphism test limited to {MAX_VERTICES} vertices")


def isomorphic_small(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """Some isomorphism ``g -> h`` or None; both graphs must be tiny."""
    _check_size(g, h)
    return find_isomorphism(g, h)


def all_isomorphisms_small(g: Graph, h: Graph) -> list[tuple[int, ...]]:
    _check_size(g, h)
    return list(iter_isomorphisms(g, h))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Isomorphism test for graphs of any size with few twin classes.

    Compares twin-free quotients with multiplicities as vertex colours,
    which sidesteps the factorial symmetry of large blobs.
    """
    if g.n != h.n or g.m != h.m:
        return False
    rg, rh = twin_reduce(g), twin_reduce(h)
    return next(iter_isomorphisms(rg.quotient, rh.quotient,
                                  rg.multiplicities, rh.multiplicities), None) is not None
