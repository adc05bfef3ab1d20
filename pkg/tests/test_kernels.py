"""Both kernel backends against each other and against direct definitions."""

import itertools
import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equimatch import kernels
from equimatch.graph import Graph, connected_components
from equimatch.matching import iter_maximal_matchings
from strategies import graphs

BACKENDS = ["python"] + (["cython"] if kernels.COMPILED else [])


def naive_claw(g):
    for c in range(g.n):
        for a, b, d in itertools.combinations(g.neighbors(c), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, d) or g.has_edge(b, d)):
                return True
    return False


def naive_triples(g):
    return [t for t in itertools.combinations(range(g.n), 3)
            if not any(g.has_edge(u, v) for u, v in itertools.combinations(t, 2))]


def naive_odd_even(g, removed):
    h, _ = g.remove(removed)
    sizes = [len(c) for c in connected_components(h)]
    return sum(s % 2 for s in sizes), sum(1 - s % 2 for s in sizes)


@pytest.fixture(params=BACKENDS)
def K(request):
    return kernels.backend(request.param)


def test_backend_flag():
    assert kernels.BACKEND in ("python", "cython")
    assert kernels.COMPILED == (kernels.BACKEND == "cython")


def test_pure_fallback_selected_by_environment():
    code = "import equimatch.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, EQUIMATCH_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@given(graphs(max_n=10))
def test_claw_and_triples(g):
    for name in BACKENDS:
        K = kernels.backend(name)
        claw = K.find_claw(g.n, g.adj)
        assert (claw is not None) == naive_claw(g)
        if claw is not None:
            c, a, b, d = claw
            assert a < b < d and all(g.has_edge(c, x) for x in (a, b, d))
        triples = naive_triples(g)
        assert K.find_independent_triple(g.n, g.adj) == (triples[0] if triples else None)


@given(graphs(max_n=10), st.data())
def test_components_and_odd_even(g, data):
    removed = data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n)) if g.n else set()
    mask = sum(1 << v for v in removed)
    for name in BACKENDS:
        K = kernels.backend(name)
        comps = K.components(g.n, g.adj)
        assert [tuple(v for v in range(g.n) if c >> v & 1) for c in comps] == connected_components(g)
        assert K.odd_even_counts(g.n, g.adj, mask) == naive_odd_even(g, removed)
        assert K.is_connected(g.n, g.adj) == (len(connected_components(g)) == 1)


@given(graphs(max_n=9))
def test_matching_profile_against_generator(g):
    sizes = {len(m) for m in iter_maximal_matchings(g)}
    count = sum(1 for _ in iter_maximal_matchings(g))
    for name in BACKENDS:
        K = kernels.backend(name)
        c, mask, small, large = K.matching_profile(g.n, g.adj, 10**6, False)
        assert c == count
        assert {k for k in range(g.n + 1) if mask >> k & 1} == sizes
        assert len(small) == min(sizes) and len(large) == max(sizes)


def test_matching_profile_overflow(K):
    g = Graph.from_edges(8, list(itertools.combinations(range(8), 2)))
    assert K.matching_profile(g.n, g.adj, 10, False)[0] == -1
    assert K.matching_profile(g.n, g.adj, 105, False)[0] == 105


@given(graphs(max_n=9))
def test_backends_agree_everywhere(g):
    if len(BACKENDS) < 2:
        return
    py, cy = kernels.backend("python"), kernels.backend("cython")
    for name, extra in [("find_bad_triple", ()), ("vertex_connectivity", (3,)),
                        ("matching_profile", (10**6, True))]:
        assert getattr(py, name)(g.n, g.adj, *extra) == getattr(cy, name)(g.n, g.adj, *extra)


def test_compiled_refuses_large_graphs():
    if not kernels.COMPILED:
        pytest.skip("compiled kernels not built")
    g = Graph(65)
    with pytest.raises((ValueError, OverflowError)):
        kernels.backend("cython").components(g.n, g.adj)
    # the dispatcher falls back instead
    assert len(kernels.components(g.n, g.adj)) == 65
