import itertools

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from equimatch.families import BASES
from equimatch.graph import (
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    expand,
    is_clique,
    is_connected,
    is_cycle_c4,
    is_independent,
    odd_even_component_counts,
    path_graph,
    twin_reduce,
    vertex_connectivity_capped,
)
from equimatch.isomorphism import find_isomorphism, iter_isomorphisms
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


class TestConstruction:
    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph.from_edges(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(2, [0b10, 0])

    def test_immutable(self):
        g = path_graph(3)
        with pytest.raises(AttributeError):
            g.n = 4

    def test_code_round_trip(self):
        for code in range(1 << 6):
            assert Graph.from_code(4, code).to_code() == code

    def test_code_bit_order(self):
        # bit 0 is pair (0,1), bit 1 is (0,2), bit 2 is (1,2)
        assert list(Graph.from_code(3, 0b100).edges()) == [(1, 2)]
        assert list(Graph.from_code(3, 0b010).edges()) == [(0, 2)]

    def test_induced_back_mapping(self):
        g = cycle_graph(6)
        h, back = g.induced([1, 2, 3, 5])
        assert back == (1, 2, 3, 5)
        assert sorted(h.edges()) == [(0, 1), (1, 2)]

    def test_remove_and_complement(self):
        h, back = cycle_graph(5).remove([2])
        assert back == (0, 1, 3, 4) and h.m == 3
        assert complete_graph(4).complement().m == 0


class TestComponents:
    def test_examples(self):
        assert connected_components(cycle_graph(4)) == [(0, 1, 2, 3)]
        assert connected_components(Graph(2)) == [(0,), (1,)]
        h, _ = path_graph(5).remove([2])
        assert [len(c) for c in connected_components(h)] == [2, 2]

    @given(graphs())
    def test_matches_networkx(self, g):
        ours = connected_components(g)
        theirs = sorted(tuple(sorted(c)) for c in nx.connected_components(to_nx(g)))
        assert ours == theirs

    def test_odd_even_examples(self):
        assert odd_even_component_counts(path_graph(3), [1]) == (2, 0)
        assert odd_even_component_counts(cycle_graph(6), [0, 2, 4]) == (3, 0)
        c7 = cycle_graph(7)
        for t in itertools.combinations(range(7), 3):
            if is_independent(c7, t):
                odd, even = odd_even_component_counts(c7, t)
                assert odd >= 2

    @given(graphs(), st.data())
    def test_odd_even_sums(self, g, data):
        removed = data.draw(st.sets(st.integers(0, max(g.n - 1, 0)), max_size=g.n)) if g.n else set()
        odd, even = odd_even_component_counts(g, removed)
        h, _ = g.remove(removed)
        assert odd + even == len(connected_components(h))
        assert odd % 2 == (g.n - len(removed)) % 2


class TestConnectivity:
    def test_examples(self):
        assert vertex_connectivity_capped(cycle_graph(7), 3) == 2
        assert vertex_connectivity_capped(complete_graph(5), 3) is None
        assert vertex_connectivity_capped(path_graph(4), 3) == 1
        assert vertex_connectivity_capped(Graph(2), 3) == 0
        assert vertex_connectivity_capped(Graph(1), 3) == 0
        assert vertex_connectivity_capped(complete_graph(4), 3) == 3

    @given(graphs(min_n=2, max_n=9, connected=True))
    def test_matches_networkx(self, g):
        kappa = nx.node_connectivity(to_nx(g))
        got = vertex_connectivity_capped(g, 3)
        assert got == (kappa if kappa <= 3 else None)


class TestPredicates:
    def test_examples(self):
        c4 = cycle_graph(4)
        assert is_clique(complete_graph(4))
        assert not is_clique(c4)
        assert is_independent(c4, [0, 2])
        assert is_cycle_c4(c4)
        assert not is_cycle_c4(complete_graph(4))
        assert is_cycle_c4(Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]))
        assert not is_cycle_c4(path_graph(4))

    def test_is_connected_empty(self):
        assert not is_connected(Graph(0))
        assert is_connected(Graph(1))


class TestTwinReduction:
    def test_examples(self):
        red = twin_reduce(complete_graph(5))
        assert red.quotient.n == 1 and red.multiplicities == (5,)
        red = twin_reduce(cycle_graph(4))
        assert red.quotient == cycle_graph(4) and red.multiplicities == (1, 1, 1, 1)

    def test_g22_member(self):
        base = BASES["G22"].graph
        g = expand(base, (2, 1, 1, 1, 1, 3))
        red = twin_reduce(g)
        phi = find_isomorphism(red.quotient, base)
        assert phi is not None
        assert sorted(red.multiplicities) == sorted((2, 1, 1, 1, 1, 3))

    @given(graphs())
    def test_quotient_twin_free_and_expands_back(self, g):
        red = twin_reduce(g)
        h = red.quotient
        closed = [h.adj[v] | 1 << v for v in range(h.n)]
        assert len(set(closed)) == h.n
        assert all(k >= 1 for k in red.multiplicities)
        assert sum(red.multiplicities) == g.n
        # expanding reproduces g after relabeling blobs in class order
        perm = [0] * g.n
        pos = 0
        for cls in red.classes:
            for v in cls:
                perm[v] = pos
                pos += 1
        assert expand(h, red.multiplicities) == g.relabel(perm)

    @given(graphs())
    def test_idempotent(self, g):
        h = twin_reduce(g).quotient
        again = twin_reduce(h)
        assert again.quotient == h and set(again.multiplicities) <= {1}

    @pytest.mark.parametrize("family", list(BASES))
    def test_expand_reduce_inversion_on_bases(self, family):
        base = BASES[family].graph
        for mult in itertools.product((1, 2, 3), repeat=base.n):
            if sum(mult) > base.n + 4:
                continue
            red = twin_reduce(expand(base, mult))
            isos = list(iter_isomorphisms(red.quotient, base))
            assert isos
            assert any(all(red.multiplicities[i] == mult[phi[i]] for i in range(base.n)) for phi in isos)


class TestExpand:
    def test_examples(self):
        assert expand(Graph(1), [5]) == complete_graph(5)
        assert expand(cycle_graph(4), [1, 1, 1, 1]) == cycle_graph(4)
        assert expand(path_graph(3), [1, 0, 1]).m == 0

    def test_errors(self):
        with pytest.raises(ValueError):
            expand(path_graph(3), [1, 1])
        with pytest.raises(ValueError):
            expand(path_graph(3), [1, -1, 1])
