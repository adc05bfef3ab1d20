"""Undirected simple graphs on vertices ``0..n-1`` stored as neighbour bitmasks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import kernels


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def vertices_of(mask: int) -> tuple[int, ...]:
    return tuple(_bits(mask))


class Graph:
    """Immutable simple graph.

    ``adj[v]`` is an int with bit ``u`` set iff ``u`` and ``v`` are adjacent.
    Equality and hashing are by labelled adjacency, not isomorphism.
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = tuple(adj) if adj else (0,) * n
        if len(adj) != n:
            raise ValueError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full or nb < 0:
                raise ValueError(f"vertex {v} has a neighbour out of range")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at {v}-{u}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        object.__setattr__(g, "_hash", None)
        return g

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    @classmethod
    def from_code(cls, n: int, code: int) -> "Graph":
        """Graph whose pair ``(i, j)``, ``i < j``, is present iff bit
        ``j*(j-1)/2 + i`` of ``code`` is set (graph6 column order)."""
        adj = [0] * n
        bit = 0
        for j in range(1, n):
            for i in range(j):
                if code >> bit & 1:
                    adj[i] |= 1 << j
                    adj[j] |= 1 << i
                bit += 1
        return cls._trusted(n, tuple(adj))

    def to_code(self) -> int:
        code = 0
        bit = 0
        for j in range(1, self.n):
            nb = self.adj[j]
            for i in range(j):
                if nb >> i & 1:
                    code |= 1 << bit
                bit += 1
        return code

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges())})"

    def __len__(self):
        return self.n

    @property
    def m(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return vertices_of(self.adj[v])

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph._trusted(self.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the back-mapping."""
        keep = tuple(sorted(set(vertices)))
        for v in keep:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            m = 0
            for u in _bits(self.adj[v]):
                i = index.get(u)
                if i is not None:
                    m |= 1 << i
            adj.append(m)
        return Graph._trusted(len(keep), tuple(adj)), keep

    def remove(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        drop = set(vertices)
        return self.induced(v for v in range(self.n) if v not in drop)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph in which vertex ``v`` becomes ``perm[v]``."""
        adj = [0] * self.n
        for v, nb in enumerate(self.adj):
            m = 0
            for u in _bits(nb):
                m |= 1 << perm[u]
            adj[perm[v]] = m
        return Graph._trusted(self.n, tuple(adj))

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.n
        return Graph._trusted(self.n + other.n, self.adj + tuple(a << shift for a in other.adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(p: int, q: int) -> Graph:
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star_graph(leaves: int) -> Graph:
    """``K_{1,leaves}`` with centre 0."""
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


# -- structural queries ------------------------------------------------------

def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Components as sorted vertex tuples, ordered by smallest vertex."""
    return [vertices_of(c) for c in kernels.components(g.n, g.adj)]


def is_connected(g: Graph) -> bool:
    return g.n > 0 and kernels.is_connected(g.n, g.adj)


def odd_even_component_counts(g: Graph, removed: Iterable[int] = ()) -> tuple[int, int]:
    """Numbers of odd and even components of ``g`` minus ``removed``."""
    rm = mask_of(removed)
    if rm >> g.n:
        raise ValueError("removed vertex out of range")
    return kernels.odd_even_counts(g.n, g.adj, rm)


def vertex_connectivity_capped(g: Graph, cap: int = 3) -> int | None:
    """Vertex connectivity if it is at most ``cap``, else None.

    Brute force over vertex subsets of size ``<= cap``. Disconnected graphs
    and graphs with fewer than two vertices report 0.
    """
    if cap < 0:
        raise ValueError("cap must be non-negative")
    return kernels.vertex_connectivity(g.n, g.adj, cap)


def is_clique(g: Graph, vertices: Iterable[int] | None = None) -> bool:
    s = mask_of(vertices) if vertices is not None else (1 << g.n) - 1
    return all(s & ~(1 << v) & ~g.adj[v] == 0 for v in _bits(s))


def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    s = mask_of(vertices)
    return all(g.adj[v] & s == 0 for v in _bits(s))


def is_cycle_c4(g: Graph) -> bool:
    return g.n == 4 and all(bin(a).count("1") == 2 for a in g.adj) and kernels.is_connected(4, g.adj)


def is_cycle_graph(g: Graph) -> bool:
    """Whether ``g`` is a single cycle ``C_n`` (n >= 3)."""
    return g.n >= 3 and all(bin(a).count("1") == 2 for a in g.adj) and kernels.is_connected(g.n, g.adj)


# -- twin reduction ----------------------------------------------------------

@dataclass(frozen=True)
class TwinReduction:
    """Twin-free quotient of a graph.

    ``classes[i]`` lists the original vertices merged into quotient vertex
    ``i``; ``multiplicities[i] == len(classes[i])``.
    """

    quotient: Graph
    multiplicities: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]


def twin_reduce(g: Graph) -> TwinReduction:
    """Merge true twins (equal closed neighbourhoods) into single vertices.

    True-twinness is an equivalence relation and a quotient by all its
    classes is already twin-free, so one grouping pass by closed
    neighbourhood yields the same quotient as repeated pairwise merging.
    Classes are numbered by their smallest member.
    """
    groups: dict[int, int] = {}
    cls_of = [0] * g.n
    members: list[list[int]] = []
    for v in range(g.n):
        key = g.adj[v] | (1 << v)
        i = groups.get(key)
        if i is None:
            i = groups[key] = len(members)
            members.append([])
        members[i].append(v)
        cls_of[v] = i
    adj = []
    for mem in members:
        m = 0
        for u in _bits(g.adj[mem[0]]):
            m |= 1 << cls_of[u]
        m &= ~(1 << cls_of[mem[0]])
        adj.append(m)
    return TwinReduction(
        quotient=Graph._trusted(len(members), tuple(adj)),
        multiplicities=tuple(len(m) for m in members),
        classes=tuple(tuple(m) for m in members),
    )


def expand(base: Graph, multiplicities: Sequence[int]) -> Graph:
    """Blow-up: vertex ``i`` of ``base`` becomes a clique of ``multiplicities[i]``
    vertices sharing its neighbourhood. Blobs are laid out in base order."""
    if len(multiplicities) != base.n:
        raise ValueError(f"expected {base.n} multiplicities, got {len(multiplicities)}")
    if any(k < 0 for k in multiplicities):
        raise ValueError("multiplicities must be non-negative")
    start = []
    blob = []
    pos = 0
    for k in multiplicities:
        start.append(pos)
        blob.append(((1 << k) - 1) << pos)
        pos += k
    adj = []
    for i, k in enumerate(multiplicities):
        nb = 0
        for j in _bits(base.adj[i]):
            nb |= blob[j]
        for t in range(k):
            adj.append(nb | (blob[i] & ~(1 << (start[i] + t))))
    return Graph._trusted(pos, tuple(adj))
