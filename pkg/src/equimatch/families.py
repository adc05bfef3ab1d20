"""The characterised families: base graphs, generators, multiplicity
patterns and definition-level membership tests."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Sequence

from .graph import (
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    expand,
    is_clique,
    is_cycle_c4,
    is_independent,
)


class FamilyId(str, enum.Enum):
    EVEN_CLIQUE = "EVEN_CLIQUE"
    C4 = "C4"
    ALPHA_LE_2 = "ALPHA_LE_2"
    C7 = "C7"
    G11 = "G11"
    G12 = "G12"
    G13 = "G13"
    G21 = "G21"
    G22 = "G22"
    G23 = "G23"
    G3 = "G3"

    def __str__(self) -> str:
        return self.value


# classification precedence; the first family that matches wins
PRECEDENCE = tuple(FamilyId)
BLOWUP_FAMILIES = (FamilyId.G12, FamilyId.G13, FamilyId.G21, FamilyId.G22, FamilyId.G23, FamilyId.G3)
PARAMETERISED = (FamilyId.G11,) + BLOWUP_FAMILIES

PARAM_NAMES: dict[FamilyId, tuple[str, ...]] = {
    FamilyId.EVEN_CLIQUE: ("p",),
    FamilyId.C4: (),
    FamilyId.ALPHA_LE_2: (),
    FamilyId.C7: (),
    FamilyId.G11: (),
    FamilyId.G12: ("p", "x", "p2", "x2"),
    FamilyId.G13: ("p", "x"),
    FamilyId.G21: ("x", "q"),
    FamilyId.G22: ("p", "q", "x", "y"),
    FamilyId.G23: ("q", "x", "y"),
    FamilyId.G3: ("p", "q"),
}

PATTERNS: dict[FamilyId, str] = {
    FamilyId.G12: "(x, 2p-x, 1, 2p2-x2, x2)",
    FamilyId.G13: "(x, 2p-x, 1, 1, 1, 1, 1)",
    FamilyId.G21: "(1, 1, 1, 1, x, 2q+1-x)",
    FamilyId.G22: "(2p-x-y, x, y, 1, 1, 2q+1)",
    FamilyId.G23: "(1, 1, 1, 1, x, y, 2q+1-x-y)",
    FamilyId.G3: "(1, 2p, 1, 1, 1, 2q, 1)",
}

# connectivity of every member, by family
KAPPA = {
    FamilyId.G11: 1, FamilyId.G12: 1, FamilyId.G13: 1,
    FamilyId.G21: 2, FamilyId.G22: 2, FamilyId.G23: 2, FamilyId.C7: 2,
    FamilyId.G3: 3,
}


@dataclass(frozen=True)
class FamilyParams:
    """A family together with its integer parameters.

    Construction validates the parameter ranges and raises ``ValueError``
    naming the violated constraint.
    """

    family: FamilyId
    p: int | None = None
    q: int | None = None
    x: int | None = None
    y: int | None = None
    p2: int | None = None
    x2: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", FamilyId(self.family))
        names = PARAM_NAMES[self.family]
        for name in ("p", "q", "x", "y", "p2", "x2"):
            value = getattr(self, name)
            if name in names and value is None:
                raise ValueError(f"{self.family} requires parameter {name}")
            if name not in names and value is not None:
                takes = ", ".join(names) or "no parameters"
                raise ValueError(f"{self.family} takes {takes}; got {name}")
        for msg in _violations(self):
            raise ValueError(f"{self.family}: constraint {msg} violated")

    def key(self) -> tuple[int, ...]:
        return tuple(getattr(self, name) for name in PARAM_NAMES[self.family])

    def as_dict(self) -> dict[str, int]:
        return {name: getattr(self, name) for name in PARAM_NAMES[self.family]}

    def __str__(self) -> str:
        args = ", ".join(f"{k}={v}" for k, v in self.as_dict().items())
        return f"{self.family}({args})" if args else str(self.family)


def _violations(fp: FamilyParams):
    f, p, q, x, y, p2, x2 = fp.family, fp.p, fp.q, fp.x, fp.y, fp.p2, fp.x2
    if f is FamilyId.EVEN_CLIQUE:
        if p < 1:
            yield "p ≥ 1"
    elif f is FamilyId.G3:
        if p < 1:
            yield "p ≥ 1"
        if q < 1:
            yield "q ≥ 1"
    elif f is FamilyId.G21:
        if q < 1:
            yield "q ≥ 1"
        if not 2 <= x <= 2 * q:
            yield "2 ≤ x ≤ 2q"
    elif f is FamilyId.G22:
        if p < 1:
            yield "p ≥ 1"
        if q < 0:
            yield "q ≥ 0"
        if x < 1:
            yield "x ≥ 1"
        if y < 1:
            yield "y ≥ 1"
        if x + y > 2 * p - 1:
            yield "x+y ≤ 2p-1"
    elif f is FamilyId.G23:
        if q < 1:
            yield "q ≥ 1"
        if x < 1:
            yield "x ≥ 1"
        if y < 1:
            yield "y ≥ 1"
        if x + y > 2 * q + 1:
            yield "x+y ≤ 2q+1"
    elif f is FamilyId.G12:
        if p < 1:
            yield "p ≥ 1"
        if p2 < 1:
            yield "p2 ≥ 1"
        if not 1 <= x <= 2 * p - 1:
            yield "1 ≤ x ≤ 2p-1"
        if not 1 <= x2 <= 2 * p2 - 1:
            yield "1 ≤ x2 ≤ 2p2-1"
    elif f is FamilyId.G13:
        if p < 1:
            yield "p ≥ 1"
        if not 0 <= x <= 2 * p - 1:
            yield "0 ≤ x ≤ 2p-1"


def multiplicity_vector(fp: FamilyParams) -> tuple[int, ...]:
    """The blow-up multiplicities of ``fp`` in base-vertex order."""
    f, p, q, x, y, p2, x2 = fp.family, fp.p, fp.q, fp.x, fp.y, fp.p2, fp.x2
    if f is FamilyId.G3:
        return (1, 2 * p, 1, 1, 1, 2 * q, 1)
    if f is FamilyId.G21:
        return (1, 1, 1, 1, x, 2 * q + 1 - x)
    if f is FamilyId.G22:
        return (2 * p - x - y, x, y, 1, 1, 2 * q + 1)
    if f is FamilyId.G23:
        return (1, 1, 1, 1, x, y, 2 * q + 1 - x - y)
    if f is FamilyId.G12:
        return (x, 2 * p - x, 1, 2 * p2 - x2, x2)
    if f is FamilyId.G13:
        return (x, 2 * p - x, 1, 1, 1, 1, 1)
    if f is FamilyId.G11:
        return (1,) * 9
    raise ValueError(f"{f} is not a blow-up family")


def pattern_match(family: FamilyId, multiplicities: Sequence[int]) -> FamilyParams | None:
    """Recover parameters from a multiplicity vector in base-vertex order.

    Returns None when the vector does not fit the family's pattern.
    Zero entries are only legal in the family's zero-allowed slot.
    """
    family = FamilyId(family)
    base = BASES[family]
    v = tuple(multiplicities)
    if len(v) != base.graph.n:
        raise ValueError(f"{family} expects {base.graph.n} multiplicities, got {len(v)}")
    if any(k < 0 for k in v):
        return None
    if any(k == 0 and i != base.zero_allowed for i, k in enumerate(v)):
        return None
    try:
        return _invert(family, v)
    except ValueError:
        return None


def _invert(f: FamilyId, v: tuple[int, ...]) -> FamilyParams | None:
    if f is FamilyId.G11:
        return FamilyParams(f) if v == (1,) * 9 else None
    if f is FamilyId.G3:
        if (v[0], v[2], v[3], v[4], v[6]) != (1, 1, 1, 1, 1) or v[1] % 2 or v[5] % 2:
            return None
        return FamilyParams(f, p=v[1] // 2, q=v[5] // 2)
    if f is FamilyId.G21:
        if v[:4] != (1, 1, 1, 1) or (v[4] + v[5]) % 2 == 0:
            return None
        return FamilyParams(f, x=v[4], q=(v[4] + v[5] - 1) // 2)
    if f is FamilyId.G22:
        if (v[3], v[4]) != (1, 1) or v[5] % 2 == 0 or (v[0] + v[1] + v[2]) % 2:
            return None
        return FamilyParams(f, p=(v[0] + v[1] + v[2]) // 2, q=(v[5] - 1) // 2, x=v[1], y=v[2])
    if f is FamilyId.G23:
        total = v[4] + v[5] + v[6]
        if v[:4] != (1, 1, 1, 1) or total % 2 == 0:
            return None
        return FamilyParams(f, q=(total - 1) // 2, x=v[4], y=v[5])
    if f is FamilyId.G12:
        if v[2] != 1 or (v[0] + v[1]) % 2 or (v[3] + v[4]) % 2:
            return None
        return FamilyParams(f, p=(v[0] + v[1]) // 2, x=v[0], p2=(v[3] + v[4]) // 2, x2=v[4])
    if f is FamilyId.G13:
        if v[2:] != (1, 1, 1, 1, 1) or (v[0] + v[1]) % 2:
            return None
        return FamilyParams(f, p=(v[0] + v[1]) // 2, x=v[0])
    return None


# -- base graphs -----------------------------------------------------------------

@dataclass(frozen=True)
class BaseGraph:
    family: FamilyId
    graph: Graph
    roles: tuple[str, ...]
    zero_allowed: int | None = None
    relevant: tuple[tuple[Graph, tuple[int, ...]], ...] = field(default=(), compare=False)


def _base(family, roles, edges, zero_allowed=None) -> BaseGraph:
    g = Graph.from_edges(len(roles), [(a - 1, b - 1) for a, b in edges])
    relevant = [(g, tuple(range(g.n)))]
    if zero_allowed is not None:
        relevant.append(g.remove([zero_allowed]))
    return BaseGraph(FamilyId(family), g, tuple(roles), zero_allowed, tuple(relevant))


def _g11() -> list[tuple[int, int]]:
    # vertex 1 is the cut vertex; 2..5 and 6..9 are 4-cycles
    cyc = [(2, 3), (3, 4), (4, 5), (5, 2), (6, 7), (7, 8), (8, 9), (9, 6)]
    return cyc + [(1, 2), (1, 3), (1, 6), (1, 7)]


BASES: dict[FamilyId, BaseGraph] = {
    b.family: b
    for b in (
        _base(
            FamilyId.G3,
            ("a", "A-a", "s1", "s3", "s2", "A'-a'", "a'"),
            [(1, 2), (6, 7), (3, 1), (3, 2), (3, 7), (5, 1), (5, 6), (5, 7), (4, 2), (4, 6)],
        ),
        _base(
            FamilyId.G21,
            ("v1", "v2", "v3", "v4", "N(v1)∩V1", "V1-N(v1)"),
            [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (1, 5), (2, 5)],
        ),
        _base(
            FamilyId.G22,
            ("A-N(S)", "N_A(s1)", "N_A(s2)", "s1", "s2", "B"),
            [(1, 2), (1, 3), (2, 3), (4, 2), (5, 3), (4, 6), (5, 6)],
        ),
        _base(
            FamilyId.G23,
            ("s1", "a1", "a2", "s2", "N_B(s1)-N(s2)", "N_B(s2)-N(s1)", "N_B(s1)∩N_B(s2)"),
            [(1, 2), (2, 3), (3, 4), (5, 6), (5, 7), (6, 7), (1, 5), (1, 7), (4, 6), (4, 7)],
            zero_allowed=6,
        ),
        _base(
            FamilyId.G12,
            ("N_G1(v)", "G1-N(v)", "v", "G2-N(v)", "N_G2(v)"),
            [(1, 2), (4, 5), (3, 1), (3, 5)],
        ),
        _base(
            FamilyId.G13,
            ("G1-N(v)", "N_G1(v)", "v", "c1", "c2", "c3", "c4"),
            [(1, 2), (3, 2), (3, 4), (3, 5), (4, 5), (5, 6), (6, 7), (7, 4)],
            zero_allowed=0,
        ),
        _base(
            FamilyId.G11,
            ("v", "c1", "c2", "c3", "c4", "d1", "d2", "d3", "d4"),
            _g11(),
        ),
    )
}

C7 = cycle_graph(7)
C4 = cycle_graph(4)


def base_graph(family: FamilyId) -> BaseGraph:
    family = FamilyId(family)
    if family not in BASES:
        raise ValueError(f"{family} has no base graph")
    return BASES[family]


def relevant_subgraphs(family: FamilyId) -> tuple[tuple[Graph, tuple[int, ...]], ...]:
    """``(graph, positions)`` pairs: the base itself and, for a family with a
    zero-allowed slot, the base with that vertex deleted. ``positions[i]`` is
    the base index of the subgraph's vertex ``i``."""
    return base_graph(family).relevant


def generate(params: FamilyParams) -> Graph:
    f = params.family
    if f is FamilyId.ALPHA_LE_2:
        raise ValueError("ALPHA_LE_2 is a predicate class and cannot be generated")
    if f is FamilyId.EVEN_CLIQUE:
        return complete_graph(2 * params.p)
    if f is FamilyId.C4:
        return C4
    if f is FamilyId.C7:
        return C7
    return expand(BASES[f].graph, multiplicity_vector(params))


def parameter_grid(family: FamilyId, bound: int = 4):
    """Every legal parameter tuple of ``family`` with all parameters ``<= bound``."""
    family = FamilyId(family)
    names = PARAM_NAMES[family]
    if family is FamilyId.ALPHA_LE_2:
        return
    if not names:
        yield FamilyParams(family)
        return
    lo = {"q": 0, "x": 0}
    ranges = [range(lo.get(name, 1), bound + 1) for name in names]

    def rec(i, chosen):
        if i == len(names):
            try:
                yield FamilyParams(family, **dict(zip(names, chosen)))
            except ValueError:
                pass
            return
        for value in ranges[i]:
            yield from rec(i + 1, chosen + [value])

    yield from rec(0, [])


# -- membership straight from the definitions -------------------------------------

def _two_components(g: Graph, removed: Sequence[int]):
    rest, back = g.remove(removed)
    comps = connected_components(rest)
    if len(comps) != 2:
        return None
    return [tuple(back[v] for v in c) for c in comps]


def _nbrs_in(g: Graph, v: int, part) -> frozenset:
    return frozenset(u for u in part if g.has_edge(v, u))


def _is_g3(g: Graph) -> bool:
    for s in combinations(range(g.n), 3):
        if not is_independent(g, s):
            continue
        comps = _two_components(g, s)
        if comps is None:
            continue
        if not all(len(c) % 2 == 1 and is_clique(g, c) for c in comps):
            continue
        # a minimal cut: every vertex of s sees both components
        if not all(_nbrs_in(g, v, c) for v in s for c in comps):
            continue
        for s1, s2, s3 in permutations(s):
            for big, big2 in (comps, comps[::-1]):
                A, A2 = frozenset(big), frozenset(big2)
                for a in A:
                    for a2 in A2:
                        if (
                            frozenset(g.neighbors(s1)) == A | {a2}
                            and frozenset(g.neighbors(s2)) == A2 | {a}
                            and frozenset(g.neighbors(s3)) == (A | A2) - {a, a2}
                        ):
                            return True
    return False


def _is_g21(g: Graph) -> bool:
    for quad in combinations(range(g.n), 4):
        cyc, _ = g.induced(quad)
        if not is_cycle_c4(cyc):
            continue
        v1_part = [v for v in range(g.n) if v not in quad]
        if len(v1_part) < 3 or len(v1_part) % 2 == 0 or not is_clique(g, v1_part):
            continue
        for a in quad:
            for b in quad:
                if a >= b or not g.has_edge(a, b):
                    continue
                others = [v for v in quad if v not in (a, b)]
                na, nb = _nbrs_in(g, a, v1_part), _nbrs_in(g, b, v1_part)
                if (
                    na == nb
                    and 2 <= len(na) < len(v1_part)
                    and not any(_nbrs_in(g, c, v1_part) for c in others)
                ):
                    return True
    return False


def _split_by_parity(g: Graph, s):
    comps = _two_components(g, s)
    if comps is None:
        return None
    even = [c for c in comps if len(c) % 2 == 0]
    odd = [c for c in comps if len(c) % 2 == 1]
    if len(even) != 1 or len(odd) != 1:
        return None
    A, B = even[0], odd[0]
    # minimal cut: each cut vertex sees both sides
    for v in s:
        if not _nbrs_in(g, v, A) or not _nbrs_in(g, v, B):
            return None
    return A, B


def _is_g22(g: Graph) -> bool:
    for s1, s2 in combinations(range(g.n), 2):
        if g.has_edge(s1, s2):
            continue
        split = _split_by_parity(g, (s1, s2))
        if split is None:
            continue
        A, B = split
        if not (is_clique(g, A) and is_clique(g, B)):
            continue
        if _nbrs_in(g, s1, B) != frozenset(B) or _nbrs_in(g, s2, B) != frozenset(B):
            continue
        n1, n2 = _nbrs_in(g, s1, A), _nbrs_in(g, s2, A)
        if (n1 | n2) < frozenset(A) and not n1 & n2:
            return True
    return False


def _is_g23(g: Graph) -> bool:
    for s1, s2 in combinations(range(g.n), 2):
        if g.has_edge(s1, s2):
            continue
        split = _split_by_parity(g, (s1, s2))
        if split is None:
            continue
        A, B = split
        if len(A) != 2 or len(B) < 3 or not is_clique(g, A) or not is_clique(g, B):
            continue
        path, _ = g.induced((s1, s2) + tuple(A))
        # an induced P4 has 3 edges and degree sequence 1,1,2,2 and is connected
        if path.m != 3 or sorted(path.degrees()) != [1, 1, 2, 2] or len(connected_components(path)) != 1:
            continue
        if _nbrs_in(g, s1, B) | _nbrs_in(g, s2, B) == frozenset(B):
            return True
    return False


def _one_connected_parts(g: Graph):
    """Yield ``(v, G1, G2)`` for cut vertices splitting ``g`` into two parts
    that are each an even clique or a C4."""
    for v in range(g.n):
        comps = _two_components(g, [v])
        if comps is None:
            continue
        kinds = []
        for c in comps:
            sub, _ = g.induced(c)
            if len(c) % 2 == 0 and is_clique(sub):
                kinds.append("clique")
            elif is_cycle_c4(sub):
                nb = [u for u in c if g.has_edge(v, u)]
                if len(nb) != 2 or not g.has_edge(nb[0], nb[1]):
                    kinds.append(None)
                else:
                    kinds.append("c4")
            else:
                kinds.append(None)
        if None in kinds:
            continue
        if kinds == ["clique", "clique"] and not all(
            any(not g.has_edge(v, u) for u in c) for c in comps
        ):
            continue
        yield v, kinds


def _is_g1(g: Graph, want: tuple[str, str]) -> bool:
    return any(sorted(kinds) == sorted(want) for _, kinds in _one_connected_parts(g))


def membership_by_definition(g: Graph, family: FamilyId) -> bool:
    """Decide membership by searching for the witness structure named in the
    family's definition (cut vertex, independent 2-cut or 3-cut), without
    twin reduction. Brute force over candidate cut sets; test scale only."""
    family = FamilyId(family)
    if family is FamilyId.G3:
        return _is_g3(g)
    if family is FamilyId.G21:
        return _is_g21(g)
    if family is FamilyId.G22:
        return _is_g22(g)
    if family is FamilyId.G23:
        return _is_g23(g)
    if family is FamilyId.G11:
        return _is_g1(g, ("c4", "c4"))
    if family is FamilyId.G12:
        return _is_g1(g, ("clique", "clique"))
    if family is FamilyId.G13:
        return _is_g1(g, ("c4", "clique"))
    raise ValueError(f"{family} is not a parameterised family")
