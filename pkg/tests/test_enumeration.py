import networkx as nx
import pytest

from equimatch.enumeration import (
    ClassStore,
    claw_free,
    claw_free_chain,
    connected_classes,
    labeled_graphs,
)
from equimatch.graph import Graph, cycle_graph, is_connected
from equimatch.oracle import is_claw_free


def test_labeled_counts():
    # connected labeled graphs: 1, 1, 4, 38, 728
    assert [sum(1 for _ in labeled_graphs(n, connected_only=True)) for n in range(1, 6)] == [1, 1, 4, 38, 728]
    assert sum(1 for _ in labeled_graphs(4)) == 64


def test_class_counts_match_atlas():
    ours = connected_classes(7)
    atlas = [g for g in nx.graph_atlas_g()[1:] if nx.is_connected(g)]
    for n in range(1, 8):
        expected = [g for g in atlas if g.number_of_nodes() == n]
        assert len(ours[n]) == len(expected)
    # every atlas graph is isomorphic to exactly one of ours
    store = ClassStore()
    for g in ours[6]:
        store.add(g)
    for h in (g for g in atlas if g.number_of_nodes() == 6):
        assert not store.add(Graph.from_edges(6, h.edges()))


def test_claw_free_class_counts():
    counts = [len(v) for v in connected_classes(8, claw_free).values()]
    assert counts == [1, 1, 2, 5, 14, 50, 191, 881]


def test_store_dedupes_relabelings():
    store = ClassStore()
    c = cycle_graph(6)
    assert store.add(c)
    assert not store.add(c.relabel([2, 4, 0, 1, 5, 3]))
    assert len(store) == 1


def test_chain_is_seeded_and_stays_in_class():
    a = [g.adj for g in claw_free_chain(9, 300, seed=5)]
    b = [g.adj for g in claw_free_chain(9, 300, seed=5)]
    assert a == b
    assert a != [g.adj for g in claw_free_chain(9, 300, seed=6)]
    for g in claw_free_chain(9, 300, seed=5):
        assert is_connected(g) and is_claw_free(g)
    assert len({g.adj for g in claw_free_chain(9, 300, seed=5)}) > 200


def test_chain_rejects_tiny_order():
    with pytest.raises(ValueError):
        next(claw_free_chain(1, 1, 0))
