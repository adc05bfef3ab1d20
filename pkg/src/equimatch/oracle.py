"""Ground-truth deciders, independent of the recognizer.

Each negative answer comes with a certificate that can be re-checked
against the host graph with ``certificate.validate(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from . import kernels
from .graph import Graph, connected_components, is_connected, mask_of
from .matching import DEFAULT_LIMIT, Matching, MatchingOverflow, is_maximal_matching, normalize


@dataclass(frozen=True)
class Claw:
    center: int
    leaves: tuple[int, int, int]

    kind = "claw"

    def validate(self, g: Graph) -> bool:
        a, b, c = self.leaves
        return (
            len({self.center, a, b, c}) == 4
            and all(g.has_edge(self.center, x) for x in self.leaves)
            and not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c))
        )

    def relabel(self, back: Sequence[int]) -> "Claw":
        return Claw(back[self.center], tuple(back[x] for x in self.leaves))

    def payload(self) -> dict:
        return {"center": self.center, "leaves": list(self.leaves)}


@dataclass(frozen=True)
class UnequalMatchings:
    smaller: Matching
    larger: Matching

    kind = "unequal_matchings"

    def validate(self, g: Graph) -> bool:
        return (
            len(self.smaller) != len(self.larger)
            and is_maximal_matching(g, self.smaller)
            and is_maximal_matching(g, self.larger)
        )

    def relabel(self, back: Sequence[int]) -> "UnequalMatchings":
        return UnequalMatchings(
            normalize((back[u], back[v]) for u, v in self.smaller),
            normalize((back[u], back[v]) for u, v in self.larger),
        )

    def payload(self) -> dict:
        return {"smaller": [list(e) for e in self.smaller], "larger": [list(e) for e in self.larger]}


@dataclass(frozen=True)
class BadIndependentTriple:
    triple: tuple[int, int, int]

    kind = "bad_triple"

    def validate(self, g: Graph) -> bool:
        a, b, c = self.triple
        if len({a, b, c}) != 3 or g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c):
            return False
        odd, _ = kernels.odd_even_counts(g.n, g.adj, mask_of(self.triple))
        return odd < 2

    def relabel(self, back: Sequence[int]) -> "BadIndependentTriple":
        return BadIndependentTriple(tuple(back[x] for x in self.triple))

    def payload(self) -> dict:
        return {"triple": list(self.triple)}


@dataclass(frozen=True)
class Disconnected:
    components: tuple[tuple[int, ...], ...]

    kind = "disconnected"

    def validate(self, g: Graph) -> bool:
        return len(self.components) != 1 and tuple(connected_components(g)) == self.components

    def relabel(self, back: Sequence[int]) -> "Disconnected":
        return Disconnected(tuple(tuple(sorted(back[v] for v in c)) for c in self.components))

    def payload(self) -> dict:
        return {"components": [list(c) for c in self.components]}


Certificate = Union[Claw, UnequalMatchings, BadIndependentTriple, Disconnected]


# -- claws -------------------------------------------------------------------

def find_claw(g: Graph) -> Claw | None:
    hit = kernels.find_claw(g.n, g.adj)
    return None if hit is None else Claw(hit[0], hit[1:])


def is_claw_free(g: Graph) -> bool:
    return kernels.find_claw(g.n, g.adj) is None


# -- equimatchability by definition --------------------------------------------

def find_unequal_matchings(g: Graph, limit: int = DEFAULT_LIMIT) -> UnequalMatchings | None:
    """Two maximal matchings of different sizes, or None if ``g`` is equimatchable.

    Raises :class:`MatchingOverflow` when enumeration exceeds ``limit``.
    """
    count, sizes, small, large = kernels.matching_profile(g.n, g.adj, limit, True)
    if count < 0:
        raise MatchingOverflow(limit)
    if sizes & (sizes - 1) == 0:
        return None
    return UnequalMatchings(normalize(small), normalize(large))


def is_equimatchable_bruteforce(g: Graph, limit: int = DEFAULT_LIMIT) -> bool:
    return find_unequal_matchings(g, limit) is None


def exposed_count_profile(g: Graph, limit: int = DEFAULT_LIMIT) -> set[int]:
    """``{n - 2|M| : M maximal}``."""
    count, sizes, _, _ = kernels.matching_profile(g.n, g.adj, limit, False)
    if count < 0:
        raise MatchingOverflow(limit)
    return {g.n - 2 * k for k in range(g.n // 2 + 1) if sizes >> k & 1}


# -- independence number -------------------------------------------------------

ALPHA_EXACT_MAX_N = 40


def independence_number(g: Graph) -> int:
    """Exact independence number by branch and bound (n < 40 only)."""
    if g.n >= ALPHA_EXACT_MAX_N:
        raise ValueError(f"exact independence number limited to n < {ALPHA_EXACT_MAX_N}")
    adj = g.adj
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        if size + bin(cand).count("1") <= best:
            return
        # branch on a vertex of maximum degree inside the candidate set
        v = max((w for w in range(g.n) if cand >> w & 1), key=lambda w: bin(adj[w] & cand).count("1"))
        grow(cand & ~adj[v] & ~(1 << v), size + 1)
        if adj[v] & cand:
            grow(cand & ~(1 << v), size)

    grow((1 << g.n) - 1, 0)
    return best


def find_independent_triple(g: Graph) -> tuple[int, int, int] | None:
    return kernels.find_independent_triple(g.n, g.adj)


def alpha_at_most_2(g: Graph) -> bool:
    """True iff the complement is triangle-free (direct cubic scan)."""
    return kernels.find_independent_triple(g.n, g.adj) is None


# -- the independent-triple criterion -----------------------------------------

def find_bad_triple(g: Graph) -> BadIndependentTriple | None:
    """Independent triple leaving fewer than two odd components, scanning
    triples in lexicographic order. Requires a connected claw-free odd graph."""
    if g.n % 2 == 0:
        raise ValueError("criterion requires an odd number of vertices")
    if not is_connected(g):
        raise ValueError("criterion requires a connected graph")
    if not is_claw_free(g):
        raise ValueError("criterion requires a claw-free graph")
    hit = kernels.find_bad_triple(g.n, g.adj)
    return None if hit is None else BadIndependentTriple(hit)


def criterion_equimatchable_cfodd(g: Graph) -> bool:
    return find_bad_triple(g) is None


# -- certificates for the recognizer ---------------------------------------------

BRUTE_FORCE_MAX_N = 14


def negative_certificate(g: Graph) -> Certificate | None:
    """Best-effort witness that ``g`` is not connected claw-free equimatchable."""
    claw = find_claw(g)
    if claw is not None:
        return claw
    if g.n <= BRUTE_FORCE_MAX_N:
        try:
            return find_unequal_matchings(g)
        except MatchingOverflow:
            pass
    if g.n % 2 and is_connected(g):
        return find_bad_triple(g)
    return None
