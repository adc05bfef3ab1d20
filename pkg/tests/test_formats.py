import io
import random

import networkx as nx
import pytest
from hypothesis import given

from equimatch.enumeration import random_graph
from equimatch.formats import (
    FormatError,
    parse_edge_list,
    parse_graph6,
    read_graphs,
    write_edge_list,
    write_graph6,
)
from equimatch.graph import Graph, cycle_graph, path_graph, star_graph
from strategies import graphs


def nx_graph6(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).strip()


class TestGraph6:
    def test_c4(self):
        assert write_graph6(cycle_graph(4)) == b"Cl"
        assert parse_graph6("Cl") == cycle_graph(4)

    def test_star(self):
        g = parse_graph6("D?{")
        assert sorted(g.edges()) == [(0, 4), (1, 4), (2, 4), (3, 4)]
        assert g == star_graph(4).relabel([4, 0, 1, 2, 3])

    def test_trivial(self):
        assert write_graph6(Graph(0)) == b"?"
        assert write_graph6(Graph(1)) == b"@"
        assert parse_graph6(">>graph6<<Cl") == cycle_graph(4)

    @given(graphs(max_n=12))
    def test_matches_networkx_writer(self, g):
        assert write_graph6(g) == nx_graph6(g)

    @given(graphs(max_n=12))
    def test_matches_networkx_reader(self, g):
        h = nx.from_graph6_bytes(nx_graph6(g))
        ours = parse_graph6(nx_graph6(g))
        assert sorted(ours.edges()) == sorted(tuple(sorted(e)) for e in h.edges())

    def test_medium_header(self):
        rng = random.Random(3)
        for n in (63, 70, 100):
            g = random_graph(n, rng, 0.2)
            text = write_graph6(g)
            assert text[:1] == b"~"
            assert text == nx_graph6(g)
            assert parse_graph6(text) == g

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("", "empty"),
            ("C", "needs 1 bytes"),
            ("Clx", "needs 1 bytes"),
            ("C l", "outside 63..126"),
            ("~~??????", "8-byte"),
            ("~?", "truncated"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(FormatError, match=fragment):
            parse_graph6(text)


class TestEdgeList:
    def test_examples(self):
        assert parse_edge_list("3 2\n0 1\n1 2") == path_graph(3)
        assert parse_edge_list("1 0") == Graph(1)
        assert parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0") == cycle_graph(4)

    @pytest.mark.parametrize(
        "text, fragment",
        [
            ("x y", "line 1"),
            ("3 2\n0 1", "announces 2 edges"),
            ("3 1\n0 5", "line 2: edge 0-5 out of range"),
            ("3 1\n1 1", "line 2: self-loop"),
            ("3 2\n0 1\n1 0", "line 3: duplicate"),
            ("3 1\n0 a", "line 2"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(FormatError, match=fragment):
            parse_edge_list(text)

    @given(graphs())
    def test_round_trip(self, g):
        assert parse_edge_list(write_edge_list(g)) == g


class TestStreams:
    def test_graph6_stream_keeps_going(self):
        items = list(read_graphs(io.StringIO("Cl\n\nbad!\nFhCKG\n"), "graph6"))
        assert [ln for ln, _ in items] == [1, 3, 4]
        assert isinstance(items[1][1], FormatError) and "line 3" in str(items[1][1])
        assert items[2][1] == cycle_graph(7)

    def test_edge_list_stream(self):
        text = "2 1\n0 1\n\n3 1\n0 9\n1 0\n"
        items = list(read_graphs(io.StringIO(text), "edgelist"))
        assert items[0] == (1, path_graph(2))
        assert isinstance(items[1][1], FormatError) and "line 5" in str(items[1][1])
        assert items[2] == (6, Graph(1))

    def test_truncated_edge_list_stream(self):
        items = list(read_graphs(io.StringIO("3 2\n0 1\n"), "edgelist"))
        assert len(items) == 1 and isinstance(items[0][1], FormatError)

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            list(read_graphs(io.StringIO(""), "dot"))
