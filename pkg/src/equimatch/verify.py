"""Verification harness: the recognizer and generators against the oracle.

Every suite returns a :class:`SuiteReport` with counts, offending graphs
as graph6 strings, and wall time. Work is split into chunks that share
nothing; with ``jobs > 1`` the chunks go to a process pool and their
tallies are merged in submission order, so the report text does not
depend on the number of workers.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable, Sequence

from . import kernels
from .enumeration import claw_free, claw_free_chain, connected_classes, labeled_codes, random_graph
from .families import PARAMETERISED, FamilyId, KAPPA, generate, membership_by_definition, parameter_grid
from .formats import parse_graph6, write_graph6
from .graph import Graph, connected_components, vertex_connectivity_capped
from .isomorphism import are_isomorphic
from .matching import is_randomly_matchable, is_randomly_matchable_structural
from .oracle import (
    criterion_equimatchable_cfodd,
    exposed_count_profile,
    find_bad_triple,
    is_claw_free,
    is_equimatchable_bruteforce,
)
from .recognizer import classify

MAX_LISTED = 20
CHUNK = 1 << 14


@dataclass
class Tally:
    counts: Counter = field(default_factory=Counter)
    failures: Counter = field(default_factory=Counter)
    examples: list[str] = field(default_factory=list)

    def fail(self, kind: str, g: Graph, note: str = "") -> None:
        self.failures[kind] += 1
        if len(self.examples) < MAX_LISTED:
            text = write_graph6(g).decode()
            self.examples.append(f"{kind}: {text}" + (f" ({note})" if note else ""))

    def merge(self, other: "Tally") -> None:
        self.counts.update(other.counts)
        self.failures.update(other.failures)
        room = MAX_LISTED - len(self.examples)
        self.examples.extend(other.examples[:max(room, 0)])


@dataclass
class SuiteReport:
    name: str
    summary: list[str]
    tally: Tally
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.tally.failures

    def lines(self, timing: bool = True) -> list[str]:
        out = [f"[{self.name}] {'PASS' if self.ok else 'FAIL'}"]
        out += [f"  {s}" for s in self.summary]
        for kind in sorted(self.tally.failures):
            out.append(f"  failures {kind}: {self.tally.failures[kind]}")
        out += [f"  mismatch {e}" for e in self.tally.examples]
        if timing:
            out.append(f"  time: {self.elapsed:.2f}s")
        return out


def _run_chunks(worker: Callable, tasks: Sequence, jobs: int) -> Tally:
    total = Tally()
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            total.merge(worker(t))
        return total
    with Pool(jobs) as pool:
        for part in pool.imap(worker, tasks):
            total.merge(part)
    return total


# -- exhaustive scan over labeled graphs ------------------------------------------------

def check_connected_graph(g: Graph, tally: Tally) -> None:
    """All per-graph checks of the exhaustive scan; ``g`` must be connected."""
    n = g.n
    c = tally.counts
    c[f"n{n}"] += 1
    verdict = classify(g)
    cf = is_claw_free(g)
    equi = is_equimatchable_bruteforce(g)
    truth = cf and equi
    if verdict.accepted:
        c[f"n{n}_accepted"] += 1
    if verdict.accepted != truth:
        tally.fail("classify", g, f"classify={verdict.accepted} oracle={truth}")
    if verdict.accepted and verdict.classification.family is not FamilyId.ALPHA_LE_2:
        if not are_isomorphic(generate(verdict.classification), g):
            tally.fail("regenerate", g, str(verdict.classification))
    if not verdict.accepted:
        if verdict.certificate is None:
            tally.fail("certificate_missing", g)
        elif not verdict.certificate.validate(g):
            tally.fail("certificate_invalid", g, verdict.certificate.kind)
    if n % 2 == 0:
        if is_randomly_matchable(g) != is_randomly_matchable_structural(g):
            tally.fail("randomly_matchable", g)
        return
    if not cf:
        return
    c["claw_free_odd"] += 1
    bad = find_bad_triple(g)
    if (bad is None) != equi:
        tally.fail("criterion", g, f"criterion={bad is None} bruteforce={equi}")
    if bad is not None and not bad.validate(g):
        tally.fail("certificate_invalid", g, "bad_triple")
    if not equi:
        return
    c["claw_free_odd_equimatchable"] += 1
    if exposed_count_profile(g) != {1}:
        tally.fail("exposed_profile", g)
    if kernels.find_independent_triple(n, g.adj) is not None:
        c["alpha_ge_3"] += 1
        if vertex_connectivity_capped(g, 3) is None:
            tally.fail("connectivity_gt_3", g)


def _exhaustive_chunk(task: tuple[int, int, int]) -> Tally:
    n, start, stop = task
    tally = Tally()
    for code in range(start, stop):
        g = Graph.from_code(n, code)
        if kernels.is_connected(n, g.adj):
            check_connected_graph(g, tally)
    return tally


def exhaustive_suite(max_n: int = 7, jobs: int = 1) -> SuiteReport:
    """Recognizer against the definition on every connected labeled graph
    with ``n <= max_n``, plus the structural checks that ride along."""
    t0 = time.perf_counter()
    tasks = []
    for n in range(1, max_n + 1):
        total = len(labeled_codes(n))
        tasks += [(n, s, min(s + CHUNK, total)) for s in range(0, total, CHUNK)]
    tally = _run_chunks(_exhaustive_chunk, tasks, jobs)
    c = tally.counts
    connected = sum(c[f"n{n}"] for n in range(1, max_n + 1))
    summary = [
        f"n={n}: {c[f'n{n}']} connected labeled graphs, {c[f'n{n}_accepted']} accepted"
        for n in range(1, max_n + 1)
    ]
    summary += [
        f"claw-free odd: {c['claw_free_odd']}, equimatchable: {c['claw_free_odd_equimatchable']}, "
        f"with alpha >= 3: {c['alpha_ge_3']}",
        f"n≤{max_n} exhaustive: {connected} connected graphs checked, {sum(tally.failures.values())} mismatches",
    ]
    return SuiteReport("exhaustive", summary, tally, time.perf_counter() - t0)


# -- sampled criterion check ------------------------------------------------------------

def _criterion_chunk(batch: list[tuple[int, tuple[int, ...]]]) -> Tally:
    tally = Tally()
    for n, adj in batch:
        g = Graph._trusted(n, adj)
        tally.counts["samples"] += 1
        equi = is_equimatchable_bruteforce(g)
        crit = criterion_equimatchable_cfodd(g)
        if equi:
            tally.counts["equimatchable"] += 1
        if crit != equi:
            tally.fail("criterion", g, f"criterion={crit} bruteforce={equi}")
    return tally


def criterion_sample_suite(n: int = 9, samples: int = 100_000, seed: int = 0, jobs: int = 1) -> SuiteReport:
    """Independent-triple criterion against brute force on sampled
    connected claw-free graphs of odd order ``n``."""
    if n % 2 == 0:
        raise ValueError("criterion sample order must be odd")
    t0 = time.perf_counter()
    batch, tasks = [], []
    for g in claw_free_chain(n, samples, seed):
        batch.append((g.n, g.adj))
        if len(batch) == 2048:
            tasks.append(batch)
            batch = []
    if batch:
        tasks.append(batch)
    tally = _run_chunks(_criterion_chunk, tasks, jobs)
    c = tally.counts
    agree = c["samples"] - tally.failures["criterion"]
    pct = 100.0 * agree / c["samples"] if c["samples"] else 100.0
    summary = [
        f"seed={seed} n={n}: {c['samples']} samples, {c['equimatchable']} equimatchable",
        f"criterion-vs-bruteforce agreement {pct:.4g}%",
    ]
    return SuiteReport("criterion-sample", summary, tally, time.perf_counter() - t0)


# -- isomorphism classes -------------------------------------------------------------------

def randomly_matchable_suite(max_n: int = 8) -> SuiteReport:
    """Enumeration-based randomly-matchable predicate against the
    ``K_2p`` / ``K_p,p`` characterisation, one graph per connected class."""
    t0 = time.perf_counter()
    tally = Tally()
    classes = connected_classes(max_n)
    for n in range(1, max_n + 1):
        for g in classes[n]:
            tally.counts[f"n{n}"] += 1
            rm = is_randomly_matchable(g)
            if rm:
                tally.counts["randomly_matchable"] += 1
            if rm != is_randomly_matchable_structural(g):
                tally.fail("randomly_matchable", g)
    summary = [f"connected classes per n: {[tally.counts[f'n{n}'] for n in range(1, max_n + 1)]}",
               f"randomly matchable: {tally.counts['randomly_matchable']}"]
    return SuiteReport("randomly-matchable", summary, tally, time.perf_counter() - t0)


def small_matchings(g: Graph, size: int):
    """Every matching of ``g`` with at most ``size`` edges, empty one included."""
    edges = list(g.edges())

    def rec(start: int, used: int, chosen: list):
        yield tuple(chosen)
        if len(chosen) == size:
            return
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append((u, v))
            yield from rec(i + 1, used | 1 << u | 1 << v, chosen)
            chosen.pop()

    yield from rec(0, 0, [])


def isolating_violation(g: Graph, size: int = 2):
    """A matching of at most ``size`` edges whose removal breaks the
    one-odd-component rule, or None. Meant for connected claw-free odd
    equimatchable ``g``: after deleting V(M) there must be exactly one odd
    component, it must be equimatchable, and every even component must be
    randomly matchable."""
    for m in small_matchings(g, size):
        rest, _ = g.remove([v for e in m for v in e])
        odd = 0
        for comp in connected_components(rest):
            part, _ = rest.induced(comp)
            if part.n % 2:
                odd += 1
                if not is_equimatchable_bruteforce(part):
                    return m
            elif not is_randomly_matchable(part):
                return m
        if odd != 1:
            return m
    return None


def claw_free_classes_suite(max_n: int = 9) -> SuiteReport:
    """Recognizer against the oracle on every connected claw-free class
    with ``n <= max_n``; reaches the larger base graphs that labeled
    enumeration cannot."""
    t0 = time.perf_counter()
    tally = Tally()
    classes = connected_classes(max_n, claw_free)
    families = Counter()
    for n in range(1, max_n + 1):
        for g in classes[n]:
            tally.counts[f"n{n}"] += 1
            v = classify(g)
            truth = is_equimatchable_bruteforce(g)
            if v.accepted != truth:
                tally.fail("classify", g, f"classify={v.accepted} oracle={truth}")
            if v.accepted:
                families[str(v.family)] += 1
                if n % 2:
                    tally.counts["isolating_checked"] += 1
                    bad = isolating_violation(g)
                    if bad is not None:
                        tally.fail("isolating", g, f"matching {list(bad)}")
            elif v.certificate is None or not v.certificate.validate(g):
                tally.fail("certificate", g)
    summary = [
        f"connected claw-free classes per n: {[tally.counts[f'n{n}'] for n in range(1, max_n + 1)]}",
        "accepted by family: " + ", ".join(f"{k}={families[k]}" for k in sorted(families)),
        f"odd accepted graphs checked against matching removal (up to 2 edges): {tally.counts['isolating_checked']}",
    ]
    return SuiteReport("claw-free-classes", summary, tally, time.perf_counter() - t0)


# -- generator grid --------------------------------------------------------------------------

BRUTE_FORCE_LIMIT_N = 12


def check_family_member(family: FamilyId, params, tally: Tally) -> None:
    g = generate(params)
    tally.counts["instances"] += 1
    tally.counts["max_n"] = max(tally.counts["max_n"], g.n)
    tag = str(params)
    if g.n % 2 == 0 or not kernels.is_connected(g.n, g.adj):
        tally.fail("shape", g, tag)
        return
    if not is_claw_free(g):
        tally.fail("claw", g, tag)
        return
    equi = is_equimatchable_bruteforce(g) if g.n <= BRUTE_FORCE_LIMIT_N else criterion_equimatchable_cfodd(g)
    if not equi:
        tally.fail("equimatchable", g, tag)
    kappa = vertex_connectivity_capped(g, 3)
    if kappa != KAPPA[family]:
        tally.fail("connectivity", g, f"{tag} kappa={kappa}")
    if kernels.find_independent_triple(g.n, g.adj) is None:
        tally.fail("alpha", g, tag)
    if family is not FamilyId.G11 and not membership_by_definition(g, family):
        tally.fail("definition", g, tag)
    v = classify(g)
    if not v.accepted:
        tally.fail("roundtrip", g, f"{tag} rejected")
    elif v.classification.family is FamilyId.ALPHA_LE_2 or not are_isomorphic(generate(v.classification), g):
        tally.fail("roundtrip", g, f"{tag} -> {v.classification}")
    elif v.classification != params:
        tally.counts["reclassified"] += 1


def family_grid_suite(bound: int = 4) -> SuiteReport:
    """Soundness and round trip for every legal parameter tuple with all
    parameters at most ``bound``."""
    t0 = time.perf_counter()
    tally = Tally()
    per_family = []
    for family in PARAMETERISED:
        before = tally.counts["instances"]
        for params in parameter_grid(family, bound):
            check_family_member(family, params, tally)
        per_family.append(f"{family}={tally.counts['instances'] - before}")
    summary = [
        f"instances: {tally.counts['instances']} ({', '.join(per_family)}), largest n={tally.counts['max_n']}",
        f"reclassified under precedence or symmetry: {tally.counts['reclassified']}",
        "families: all instances oracle-confirmed" if not tally.failures else "families: failures present",
    ]
    return SuiteReport("family-grid", summary, tally, time.perf_counter() - t0)


# -- graph6 -----------------------------------------------------------------------------------

def _graph6_roundtrip(g: Graph, tally: Tally) -> None:
    tally.counts["graphs"] += 1
    text = write_graph6(g)
    back = parse_graph6(text)
    if back != g or write_graph6(back) != text:
        tally.fail("graph6", g)


def graph6_suite(max_n: int = 6, samples: int = 10_000, seed: int = 0, max_random_n: int = 62) -> SuiteReport:
    t0 = time.perf_counter()
    tally = Tally()
    for n in range(0, max_n + 1):
        for code in labeled_codes(n):
            _graph6_roundtrip(Graph.from_code(n, code), tally)
    exhaustive = tally.counts["graphs"]
    rng = random.Random(seed)
    for _ in range(samples):
        _graph6_roundtrip(random_graph(rng.randint(0, max_random_n), rng), tally)
    summary = [f"labeled n≤{max_n}: {exhaustive}, seeded random n≤{max_random_n}: {samples}"]
    return SuiteReport("graph6", summary, tally, time.perf_counter() - t0)


# -- driver -------------------------------------------------------------------------------------

SUITES = ("exhaustive", "criterion-sample", "family-grid", "randomly-matchable", "claw-free-classes", "graph6")


def run(
    suites: Iterable[str] = SUITES,
    *,
    max_n: int = 7,
    samples: int = 100_000,
    seed: int = 0,
    jobs: int = 1,
) -> list[SuiteReport]:
    runners = {
        "exhaustive": lambda: exhaustive_suite(max_n, jobs),
        "criterion-sample": lambda: criterion_sample_suite(9, samples, seed, jobs),
        "family-grid": lambda: family_grid_suite(4),
        "randomly-matchable": lambda: randomly_matchable_suite(8),
        "claw-free-classes": lambda: claw_free_classes_suite(9),
        "graph6": lambda: graph6_suite(6, 10_000, seed),
    }
    reports = []
    for name in suites:
        if name not in runners:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        reports.append(runners[name]())
    return reports
