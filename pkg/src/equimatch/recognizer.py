"""Recognition of claw-free equimatchable graphs."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable

from . import kernels
from .families import (
    BASES,
    BLOWUP_FAMILIES,
    PATTERNS,
    FamilyId,
    FamilyParams,
    pattern_match,
)
from .graph import Graph, TwinReduction, connected_components, is_clique, is_cycle_c4, is_cycle_graph, twin_reduce
from .isomorphism import iter_isomorphisms
from .oracle import Certificate, Disconnected, negative_certificate


class Reason(str, enum.Enum):
    NOT_CONNECTED = "NOT_CONNECTED"
    EVEN_NOT_CLIQUE_NOR_C4 = "EVEN_NOT_CLIQUE_NOR_C4"
    NO_FAMILY_MATCH = "NO_FAMILY_MATCH"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Match:
    """How a twin-free quotient was matched against a base graph."""

    params: FamilyParams
    positions: tuple[int, ...]  # quotient vertex -> base position
    base_multiplicities: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    step: str
    classification: FamilyParams | None = None
    reason: Reason | None = None
    certificate: Certificate | None = None
    components: tuple["Verdict", ...] = ()
    vertices: tuple[int, ...] = ()
    reduction: TwinReduction | None = None
    match: Match | None = None
    isomorphisms_tried: int = 0
    all_matches: tuple[FamilyParams, ...] = ()

    @property
    def family(self) -> FamilyId | None:
        return self.classification.family if self.classification else None

    @property
    def params(self) -> dict[str, int] | None:
        return self.classification.as_dict() if self.classification else None

    def to_record(self) -> dict:
        rec = {
            "accepted": self.accepted,
            "family": str(self.family) if self.family else None,
            "params": self.params,
            "reason": str(self.reason) if self.reason else None,
            "certificate": None,
            "components": [c.to_record() for c in self.components],
        }
        if self.certificate is not None:
            rec["certificate"] = {"kind": self.certificate.kind, **self.certificate.payload()}
        if self.all_matches:
            rec["all_families"] = [str(fp) for fp in self.all_matches]
        return rec


TriangleTest = Callable[[Graph], "tuple[int, int, int] | None"]


def _complement_triangle(g: Graph):
    return kernels.find_independent_triple(g.n, g.adj)


def classify(
    g: Graph,
    *,
    all_families: bool = False,
    require_connected: bool = False,
    certificates: bool = True,
    triangle_test: TriangleTest = _complement_triangle,
) -> Verdict:
    """Decide whether ``g`` is claw-free and equimatchable.

    Disconnected graphs are decided componentwise: maximal matchings of a
    disjoint union are exactly unions of maximal matchings of the parts, so
    the union is claw-free equimatchable iff every part is. With
    ``require_connected`` a disconnected graph is rejected outright.

    ``triangle_test`` returns an independent triple of ``g`` (a triangle of
    its complement) or None; swap it for a faster method if needed.
    """
    comps = connected_components(g)
    if len(comps) == 1:
        return _classify_connected(g, all_families, certificates, triangle_test)
    if require_connected:
        cert = Disconnected(tuple(comps)) if certificates else None
        return Verdict(False, "connectivity", reason=Reason.NOT_CONNECTED, certificate=cert)
    subs = []
    for comp in comps:
        h, back = g.induced(comp)
        v = _classify_connected(h, all_families, certificates, triangle_test)
        subs.append(_with_vertices(v, back))
    failed = next((s for s in subs if not s.accepted), None)
    if failed is None:
        return Verdict(True, "componentwise", components=tuple(subs))
    return Verdict(
        False,
        "componentwise",
        reason=failed.reason,
        certificate=failed.certificate,
        components=tuple(subs),
    )


def _with_vertices(v: Verdict, back: tuple[int, ...]) -> Verdict:
    cert = v.certificate.relabel(back) if v.certificate is not None else None
    return Verdict(
        v.accepted, v.step, v.classification, v.reason, cert, v.components, back,
        v.reduction, v.match, v.isomorphisms_tried, v.all_matches,
    )


def _reject(g: Graph, step: str, reason: Reason, certificates: bool, **kw) -> Verdict:
    cert = negative_certificate(g) if certificates else None
    return Verdict(False, step, reason=reason, certificate=cert, vertices=tuple(range(g.n)), **kw)


def _classify_connected(g: Graph, all_families: bool, certificates: bool, triangle_test) -> Verdict:
    n = g.n
    ident = tuple(range(n))
    if n % 2 == 0:
        if is_clique(g):
            return Verdict(True, "even: clique", FamilyParams(FamilyId.EVEN_CLIQUE, p=n // 2), vertices=ident)
        if is_cycle_c4(g):
            return Verdict(True, "even: C4", FamilyParams(FamilyId.C4), vertices=ident)
        return _reject(g, "even: neither clique nor C4", Reason.EVEN_NOT_CLIQUE_NOR_C4, certificates)

    if triangle_test(g) is None:
        return Verdict(True, "odd: complement triangle-free", FamilyParams(FamilyId.ALPHA_LE_2), vertices=ident)

    if n == 7 and is_cycle_graph(g):
        return Verdict(True, "odd: C7", FamilyParams(FamilyId.C7), vertices=ident)
    g11 = BASES[FamilyId.G11].graph
    if n == g11.n and g.m == g11.m and next(iter_isomorphisms(g, g11), None) is not None:
        return Verdict(True, "odd: G11", FamilyParams(FamilyId.G11), vertices=ident)

    red = twin_reduce(g)
    h = red.quotient
    tried = 0
    found: list[Match] = []
    for family in BLOWUP_FAMILIES:
        best: Match | None = None
        for target, positions in BASES[family].relevant:
            if target.n != h.n or target.m != h.m:
                continue
            width = len(BASES[family].roles)
            for phi in iter_isomorphisms(h, target):
                tried += 1
                vec = [0] * width
                pos = tuple(positions[phi[i]] for i in range(h.n))
                for i, slot in enumerate(pos):
                    vec[slot] = red.multiplicities[i]
                fp = pattern_match(family, vec)
                if fp is not None and (best is None or fp.key() < best.params.key()):
                    best = Match(fp, pos, tuple(vec))
        if best is not None:
            found.append(best)
            if not all_families:
                break
    if found:
        first = found[0]
        return Verdict(
            True,
            f"twin-free quotient matches {first.params.family}",
            first.params,
            vertices=ident,
            reduction=red,
            match=first,
            isomorphisms_tried=tried,
            all_matches=tuple(m.params for m in found) if all_families else (),
        )
    return _reject(
        g, "twin-free quotient matches no family", Reason.NO_FAMILY_MATCH, certificates,
        reduction=red, isomorphisms_tried=tried,
    )


def is_claw_free_equimatchable(g: Graph) -> bool:
    return classify(g, certificates=False).accepted


def explain(v: Verdict, indent: str = "") -> str:
    """Human-readable trace of how a verdict was reached."""
    lines = [f"{indent}{'accepted' if v.accepted else 'rejected'}: step {v.step!r}"]
    if v.classification is not None:
        lines.append(f"{indent}  family: {v.classification}")
    if v.reason is not None:
        lines.append(f"{indent}  reason: {v.reason}")
    if v.reduction is not None:
        red = v.reduction
        lines.append(f"{indent}  twin classes: {[list(c) for c in red.classes]}")
        lines.append(f"{indent}  multiplicities: {red.multiplicities}")
        lines.append(f"{indent}  isomorphisms tried: {v.isomorphisms_tried}")
    if v.match is not None:
        fam = v.match.params.family
        roles = BASES[fam].roles
        lines.append(f"{indent}  base multiplicities: {v.match.base_multiplicities}")
        lines.append(f"{indent}  pattern: {PATTERNS.get(fam, '')}")
        assigned = ", ".join(
            f"{roles[slot]}<-{list(v.reduction.classes[i])}" for i, slot in enumerate(v.match.positions)
        )
        lines.append(f"{indent}  roles: {assigned}")
    if v.all_matches:
        lines.append(f"{indent}  all matching families: {', '.join(str(m) for m in v.all_matches)}")
    if v.certificate is not None:
        lines.append(f"{indent}  certificate: {v.certificate.kind} {v.certificate.payload()}")
    for i, sub in enumerate(v.components):
        lines.append(f"{indent}  component {i} on vertices {list(sub.vertices)}:")
        lines.append(explain(sub, indent + "    "))
    return "\n".join(lines)
