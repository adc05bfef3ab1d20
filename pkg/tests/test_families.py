import re

import pytest

from equimatch.families import (
    BASES,
    BLOWUP_FAMILIES,
    KAPPA,
    PARAMETERISED,
    FamilyId,
    FamilyParams,
    base_graph,
    generate,
    membership_by_definition,
    multiplicity_vector,
    parameter_grid,
    pattern_match,
    relevant_subgraphs,
)
from equimatch.graph import (
    complete_graph,
    connected_components,
    cycle_graph,
    expand,
    is_cycle_c4,
    path_graph,
    twin_reduce,
    vertex_connectivity_capped,
)
from equimatch.isomorphism import find_isomorphism
from equimatch.oracle import independence_number, is_claw_free, is_equimatchable_bruteforce

G = FamilyId


class TestBases:
    def test_sizes(self):
        assert (base_graph(G.G3).graph.n, base_graph(G.G3).graph.m) == (7, 10)
        assert (base_graph(G.G11).graph.n, base_graph(G.G11).graph.m) == (9, 12)
        assert find_isomorphism(base_graph(G.G12).graph, path_graph(5)) is not None

    @pytest.mark.parametrize("family", list(BASES))
    def test_twin_free_with_roles(self, family):
        b = BASES[family]
        assert twin_reduce(b.graph).quotient.n == b.graph.n
        assert len(b.roles) == len(set(b.roles)) == b.graph.n

    def test_zero_allowed_slots(self):
        assert {f: b.zero_allowed for f, b in BASES.items() if b.zero_allowed is not None} == {G.G13: 0, G.G23: 6}
        g13 = relevant_subgraphs(G.G13)
        assert len(g13) == 2 and g13[1][1] == (1, 2, 3, 4, 5, 6)
        assert len(relevant_subgraphs(G.G3)) == 1

    def test_no_base_for_predicate_classes(self):
        with pytest.raises(ValueError):
            base_graph(G.C7)


class TestParams:
    @pytest.mark.parametrize(
        "kwargs, fragment",
        [
            (dict(family=G.G21, q=1, x=3), "2 ≤ x ≤ 2q"),
            (dict(family=G.G22, p=1, q=0, x=1, y=1), "x+y ≤ 2p-1"),
            (dict(family=G.G3, p=0, q=1), "p"),
            (dict(family=G.G23, q=1, x=2, y=2), "x+y ≤ 2q+1"),
            (dict(family=G.G13, p=1, x=2), "0 ≤ x ≤ 2p-1"),
            (dict(family=G.G12, p=1, x=0, p2=1, x2=1), "1 ≤ x ≤ 2p-1"),
            (dict(family=G.G3, p=1), "requires parameter q"),
            (dict(family=G.C4, p=1), "takes no parameters"),
        ],
    )
    def test_violations_name_the_constraint(self, kwargs, fragment):
        with pytest.raises(ValueError, match=re.escape(fragment)):
            FamilyParams(**kwargs)

    def test_str_and_dict(self):
        fp = FamilyParams(G.G22, p=2, q=0, x=1, y=1)
        assert str(fp) == "G22(p=2, q=0, x=1, y=1)"
        assert fp.as_dict() == {"p": 2, "q": 0, "x": 1, "y": 1}
        assert fp.key() == (2, 0, 1, 1)


class TestGenerate:
    def test_examples(self):
        g22 = generate(FamilyParams(G.G22, p=2, q=0, x=1, y=1))
        assert g22.n == 7 and multiplicity_vector(FamilyParams(G.G22, p=2, q=0, x=1, y=1)) == (2, 1, 1, 1, 1, 1)
        fp = FamilyParams(G.G21, q=1, x=2)
        assert multiplicity_vector(fp) == (1, 1, 1, 1, 2, 1)
        assert generate(fp).n == 7
        g13 = generate(FamilyParams(G.G13, p=1, x=0))
        assert g13.n == 7
        # the cut vertex sees a K2 on one side and an adjacent pair of a C4 on the other
        v = next(u for u in range(7) if vertex_connectivity_capped(g13.remove([u])[0], 1) == 0)
        sides = connected_components(g13.remove([v])[0])
        assert sorted(len(c) for c in sides) == [2, 4]

    def test_literal_graphs(self):
        assert generate(FamilyParams(G.EVEN_CLIQUE, p=3)) == complete_graph(6)
        assert is_cycle_c4(generate(FamilyParams(G.C4)))
        assert generate(FamilyParams(G.C7)) == cycle_graph(7)
        with pytest.raises(ValueError):
            generate(FamilyParams(G.ALPHA_LE_2))

    def test_smallest_g3(self):
        g = expand(base_graph(G.G3).graph, [1, 2, 1, 1, 1, 2, 1])
        assert g == generate(FamilyParams(G.G3, p=1, q=1))
        assert g.n == 9 and is_claw_free(g) and is_equimatchable_bruteforce(g)
        assert vertex_connectivity_capped(g, 3) == 3 and independence_number(g) == 3

    def test_grid_size(self):
        counts = {f: sum(1 for _ in parameter_grid(f, 4)) for f in PARAMETERISED}
        assert counts == {G.G11: 1, G.G12: 144, G.G13: 16, G.G21: 10, G.G22: 140, G.G23: 44, G.G3: 16}

    @pytest.mark.parametrize("family", PARAMETERISED)
    def test_small_grid_soundness(self, family):
        for fp in parameter_grid(family, 2):
            g = generate(fp)
            assert g.n % 2 == 1 and is_claw_free(g) and is_equimatchable_bruteforce(g)
            assert vertex_connectivity_capped(g, 3) == KAPPA[family]
            assert independence_number(g) >= 3


class TestPatternMatch:
    def test_examples(self):
        assert pattern_match(G.G3, (1, 4, 1, 1, 1, 2, 1)) == FamilyParams(G.G3, p=2, q=1)
        assert pattern_match(G.G3, (1, 3, 1, 1, 1, 2, 1)) is None
        assert pattern_match(G.G23, (1, 1, 1, 1, 2, 1, 0)) == FamilyParams(G.G23, q=1, x=2, y=1)
        assert pattern_match(G.G22, (2, 1, 1, 1, 1, 2)) is None
        assert pattern_match(G.G22, (2, 1, 1, 2, 1, 1)) is None
        assert pattern_match(G.G12, (1, 1, 0, 1, 1)) is None
        assert pattern_match(G.G13, (0, 2, 1, 1, 1, 1, 1)) == FamilyParams(G.G13, p=1, x=0)

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            pattern_match(G.G3, (1, 2, 1))

    @pytest.mark.parametrize("family", PARAMETERISED)
    def test_inverts_generation(self, family):
        for fp in parameter_grid(family, 4):
            assert pattern_match(family, multiplicity_vector(fp)) == fp


class TestDefinitions:
    def test_examples(self):
        assert membership_by_definition(generate(FamilyParams(G.G22, p=2, q=0, x=1, y=1)), G.G22)
        for family in PARAMETERISED:
            assert not membership_by_definition(cycle_graph(7), family)
            assert not membership_by_definition(complete_graph(7), family)

    def test_rejects_non_parameterised(self):
        with pytest.raises(ValueError):
            membership_by_definition(cycle_graph(7), G.C7)

    def test_grid_membership_and_overlap(self):
        """Every grid member satisfies its own definition. The only
        cross-membership is G22 with q = 0 meeting the G23 definition,
        whose text (unlike its pattern) lets one private blob be empty."""
        cross = set()
        for family in PARAMETERISED:
            for fp in parameter_grid(family, 3):
                g = generate(fp)
                assert membership_by_definition(g, family), fp
                for other in PARAMETERISED:
                    if other is not family and membership_by_definition(g, other):
                        cross.add((family, other, fp.q))
        assert cross == {(G.G22, G.G23, 0)}

    def test_blowup_families_listed_in_precedence_order(self):
        assert list(BLOWUP_FAMILIES) == [G.G12, G.G13, G.G21, G.G22, G.G23, G.G3]
