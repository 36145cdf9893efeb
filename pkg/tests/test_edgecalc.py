"""Star edit predictions, edge addition types, and the guaranteed edits."""

from __future__ import annotations

import pytest

from lightsout import analysis, edgecalc, oracle
from lightsout.analysis import AO, HO, NO
from lightsout.errors import InputError, PreconditionError
from lightsout.gf2 import BitVector
from lightsout.graph import (
    StarSpec,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_labeled_graphs,
    path_graph,
    toggle_edge,
)

K2 = complete_graph(2)
K3 = complete_graph(3)
P3 = path_graph(3)
P4 = path_graph(4)
P5 = path_graph(5)
C5 = cycle_graph(5)
K2_K2 = disjoint_union(complete_graph(2), complete_graph(2))
TWO_K1 = empty_graph(2)
KBAR3 = empty_graph(3)
K1_P3 = disjoint_union(empty_graph(1), path_graph(3))
K2_K1 = disjoint_union(complete_graph(2), empty_graph(1))


def cross(tag: str) -> edgecalc.StarAux:
    return edgecalc.StarAux("cross", cross_tag=tag)


def union(tag: str) -> edgecalc.StarAux:
    return edgecalc.StarAux("union", union_tag=tag)


NONE_AUX = edgecalc.StarAux("none")

# The eleven prediction rows, frozen in the table's own orientation.
TABLE_ROWS = [
    (NO, NO, cross(NO), 0, NO, NO),
    (NO, NO, cross(AO), 2, HO, HO),
    (NO, AO, cross(NO), 1, AO, HO),
    (NO, AO, cross(AO), 0, NO, AO),
    (AO, AO, cross(NO), 0, AO, AO),
    (AO, AO, cross(AO), 1, HO, HO),
    (HO, HO, union(HO), -2, NO, NO),
    (HO, HO, union(AO), -1, AO, AO),
    (HO, HO, union(NO), 0, HO, HO),
    (NO, HO, NONE_AUX, 0, NO, HO),
    (AO, HO, NONE_AUX, -1, NO, AO),
]


class TestPredictStar:
    @pytest.mark.parametrize("a1,a2,aux,delta,after1,after2", TABLE_ROWS)
    def test_table_rows(self, a1, a2, aux, delta, after1, after2):
        assert edgecalc.predict_star(a1, a2, aux) == edgecalc.Prediction(delta, after1, after2)

    def test_mirrored_rows(self):
        assert edgecalc.predict_star(HO, NO, NONE_AUX) == edgecalc.Prediction(0, HO, NO)
        assert edgecalc.predict_star(HO, AO, NONE_AUX) == edgecalc.Prediction(-1, AO, NO)
        # cross class flips across a mixed AO/NO pair
        assert edgecalc.predict_star(AO, NO, cross(AO)) == edgecalc.Prediction(1, HO, AO)
        assert edgecalc.predict_star(AO, NO, cross(NO)) == edgecalc.Prediction(0, AO, NO)

    def test_inconsistent_aux_rejected(self):
        with pytest.raises(InputError):
            edgecalc.predict_star(NO, NO, union(HO))
        with pytest.raises(InputError):
            edgecalc.predict_star(HO, HO, cross(NO))
        with pytest.raises(InputError):
            edgecalc.predict_star(AO, HO, cross(NO))
        with pytest.raises(InputError):
            edgecalc.predict_star(NO, NO, edgecalc.StarAux("cross", cross_tag=HO))

    def test_bad_tags_rejected(self):
        with pytest.raises(InputError):
            edgecalc.predict_star("XX", NO, cross(NO))


class TestAnalyzeStar:
    def test_two_disjoint_edges_merge(self):
        r = edgecalc.analyze_star(K2_K2, StarSpec([0], [2]))
        assert (r.before_a1, r.before_a2) == (HO, HO)
        assert r.aux.union_tag == HO
        assert r.predicted == edgecalc.Prediction(-2, NO, NO)
        assert (r.nullity_before, r.nullity_after) == (2, 0)
        assert (r.after_a1, r.after_a2) == (NO, NO)
        assert r.agrees

    def test_single_edge_split(self):
        r = edgecalc.analyze_star(K2, StarSpec([0], [1]))
        assert (r.before_a1, r.before_a2) == (HO, HO)
        assert r.aux.union_tag == AO
        assert r.predicted == edgecalc.Prediction(-1, AO, AO)
        assert (r.nullity_before, r.nullity_after) == (1, 0)
        assert (r.after_a1, r.after_a2) == (AO, AO)
        assert r.agrees

    def test_edgeless_pair_join(self):
        r = edgecalc.analyze_star(TWO_K1, StarSpec([0], [1]))
        assert (r.before_a1, r.before_a2) == (AO, AO)
        assert r.aux.cross_tag == AO
        assert r.predicted == edgecalc.Prediction(1, HO, HO)
        assert (r.after_a1, r.after_a2) == (HO, HO)
        assert r.agrees

    def test_empty_side_rejected(self):
        with pytest.raises(InputError):
            edgecalc.analyze_star(K2, StarSpec([], [1]))

    def test_json_field_names(self):
        doc = edgecalc.analyze_star(K2, StarSpec([0], [1])).to_json_dict()
        assert doc["predicted"]["delta_nu"] == -1
        assert doc["agrees"] is True
        assert doc["before"]["aux"] == {"mode": "union", "union_tag": AO}

    def test_exhaustive_agreement_small(self):
        report = edgecalc.verify_star_table(4)
        check = report.check("star_table_agreement")
        assert check.ok
        # ordered disjoint non-empty pairs: 0, 2, 12, 50 for n = 1..4
        assert check.checked == 2 * 2 + 8 * 12 + 64 * 50


class TestAnalyzeToggle:
    def test_addition_carries_type(self):
        r = edgecalc.analyze_toggle(C5, 0, 2)
        assert r.action == "add"
        assert r.delta_nu == 0
        assert r.addition_type == "Type2"

    def test_removal_has_no_type(self):
        r = edgecalc.analyze_toggle(K2_K2, 0, 1)
        assert r.action == "remove"
        assert r.delta_nu == -1
        assert r.addition_type is None

    def test_delta_matches_recomputation(self):
        for g in (K2, K3, P4, C5, K2_K2):
            for u in range(g.n):
                for v in range(u + 1, g.n):
                    r = edgecalc.analyze_toggle(g, u, v)
                    assert r.delta_nu == analysis.nullity(toggle_edge(g, u, v)) - analysis.nullity(g)


class TestFindNullityDecreasingEdge:
    def test_single_edge(self):
        assert edgecalc.find_nullity_decreasing_edge(K2) == (0, 1)

    def test_two_disjoint_edges(self):
        assert edgecalc.find_nullity_decreasing_edge(K2_K2) == (0, 1)
        assert analysis.nullity(toggle_edge(K2_K2, 0, 1)) == 1

    def test_always_solvable_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.find_nullity_decreasing_edge(C5)

    def test_edgeless_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.find_nullity_decreasing_edge(KBAR3)


class TestFindNullityIncreasingAddition:
    def test_path(self):
        assert edgecalc.find_nullity_increasing_addition(P3) == (0, 2)
        assert analysis.nullity(toggle_edge(P3, 0, 2)) == 2

    def test_five_cycle_has_none(self):
        assert edgecalc.find_nullity_increasing_addition(C5) is None

    def test_three_isolated_vertices(self):
        assert edgecalc.find_nullity_increasing_addition(KBAR3) == (0, 1)
        assert analysis.nullity(toggle_edge(KBAR3, 0, 1)) == 1

    def test_positive_nullity_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.find_nullity_increasing_addition(K2)


class TestFindDeltaMinus2Edit:
    def test_triangle_prefers_removal(self):
        assert edgecalc.find_delta_minus2_edit(K3) == edgecalc.EdgeEdit("remove", 0, 1)

    def test_two_disjoint_edges_need_addition(self):
        assert edgecalc.find_delta_minus2_edit(K2_K2) == edgecalc.EdgeEdit("add", 0, 2)

    def test_low_nullity_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.find_delta_minus2_edit(C5)


class TestClassifyEdgeAddition:
    @pytest.mark.parametrize(
        "graph,u,v,expected",
        [
            (K1_P3, 1, 0, "Type1"),
            (C5, 0, 2, "Type2"),
            (P4, 2, 0, "Type3"),
            (TWO_K1, 0, 1, "Type4"),
            (K2_K1, 2, 0, "Type5"),
            (P5, 0, 4, "Type6"),
        ],
    )
    def test_examples(self, graph, u, v, expected):
        assert edgecalc.classify_edge_addition(graph, u, v) == expected

    def test_orientation_swap(self):
        assert edgecalc.classify_edge_addition(K1_P3, 0, 1) == "Type1"
        assert edgecalc.classify_edge_addition(K2_K1, 0, 2) == "Type5"

    def test_strict_text_reading_of_pair_type(self):
        assert edgecalc.classify_edge_addition(P5, 0, 4, strict_type6=True) == "Other"

    def test_no_no_pair_is_other(self):
        # path endpoints around the middle of P3 + spare AO vertex
        g = disjoint_union(path_graph(3), empty_graph(1))
        assert analysis.classify_set(g, [0]).tag == NO
        assert analysis.classify_set(g, [2]).tag == NO
        assert edgecalc.classify_edge_addition(g, 0, 2) == "Other"

    def test_adjacent_rejected(self):
        with pytest.raises(InputError):
            edgecalc.classify_edge_addition(C5, 0, 1)

    def test_equal_rejected(self):
        with pytest.raises(InputError):
            edgecalc.classify_edge_addition(C5, 2, 2)

    def test_type_implies_nullity_shift(self):
        # all graphs n <= 5: a typed addition forces its nullity change
        # (n = 5 is the smallest order where Type6 additions exist)
        expected = {"Type1": 0, "Type2": 0, "Type3": 1, "Type4": 1, "Type5": -1, "Type6": -1}
        seen = set()
        for n in range(2, 6):
            for g in enumerate_labeled_graphs(n):
                nu = analysis.nullity(g)
                for u, v in g.non_edges():
                    tag = edgecalc.classify_edge_addition(g, u, v)
                    if tag == "Other":
                        continue
                    seen.add(tag)
                    assert analysis.nullity(toggle_edge(g, u, v)) - nu == expected[tag]
        assert seen == set(expected)


class TestVerifyCharacterization:
    def test_path_four_is_one_addition_deep(self):
        w = edgecalc.verify_characterization(P4)
        assert w == edgecalc.CharacterizationWitness("A", (0, 1), "Type1")
        assert edgecalc.replay_witness(P4, w)

    def test_five_cycle_is_two_additions_deep(self):
        w = edgecalc.verify_characterization(C5)
        assert w.kind == "B"
        assert w.edge == (0, 1) and w.type_tag == "Type6"
        assert w.inner_edge == (0, 4) and w.inner_type_tag == "Type4"
        assert edgecalc.replay_witness(C5, w)

    def test_path_three_is_two_additions_deep(self):
        w = edgecalc.verify_characterization(P3)
        assert w.kind == "B"
        assert w.edge == (0, 1) and w.type_tag == "Type5"
        assert w.inner_edge == (1, 2) and w.inner_type_tag == "Type4"
        assert edgecalc.replay_witness(P3, w)

    def test_trajectory_of_kind_b(self):
        w = edgecalc.verify_characterization(C5)
        stripped = toggle_edge(C5, *w.edge)
        base = toggle_edge(stripped, *w.inner_edge)
        assert analysis.nullity(base) == 0
        assert analysis.nullity(stripped) == 1
        assert analysis.nullity(C5) == 0

    def test_positive_nullity_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.verify_characterization(K2)

    def test_edgeless_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.verify_characterization(KBAR3)

    def test_witness_json_field_names(self):
        doc = edgecalc.verify_characterization(C5).to_json_dict()
        assert doc["kind"] == "B"
        assert doc["edge"] == [0, 1] and doc["type_tag"] == "Type6"
        assert doc["inner_edge"] == [0, 4] and doc["inner_type_tag"] == "Type4"


class TestCheckDegreeParity:
    def test_five_cycle_verified(self):
        assert edgecalc.check_degree_parity(C5) == "verified"

    def test_path_three_verified(self):
        assert edgecalc.check_degree_parity(P3) == "verified"

    def test_path_four_fails_hypothesis(self):
        assert edgecalc.check_degree_parity(P4) == "hypothesis_failed"

    def test_positive_nullity_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.check_degree_parity(K2)


class TestCheckParityLemma:
    def test_path_never_activated_endpoint(self):
        assert edgecalc.check_parity_lemma(P3, 0) is True

    def test_cycle_always_activated_vertex(self):
        assert edgecalc.check_parity_lemma(C5, 0) is True

    def test_positive_nullity_rejected(self):
        with pytest.raises(PreconditionError):
            edgecalc.check_parity_lemma(K2, 0)

    def test_hand_value_on_path(self):
        # complement of N[0] in P3 is {2}; the pattern solving 011 is 001
        p = analysis.solve_configuration(P3, BitVector.parse("011")).particular
        assert p.to01() == "001"
        assert P3.closed_neighborhood(0).complement().dot(p) == 1


class TestTheoremSweep:
    def test_all_claims_hold_up_to_four_vertices(self):
        report = edgecalc.verify_theorem_suite(4)
        assert report.all_passed
        names = [c.name for c in report.checks]
        assert "removal_decreases_nullity" in names
        assert "characterization_witness" in names


class TestCountingLemmaBridge:
    def test_union_tag_matches_intersection_counts(self):
        # for HO singleton pairs the union class pins the overlap count:
        # NO -> half, HO -> quarter, AO -> zero of the solving patterns
        ones_of = {NO: 2, HO: 4}
        for n in range(2, 5):
            for g in enumerate_labeled_graphs(n):
                for u in range(n):
                    for v in range(u + 1, n):
                        if (
                            analysis.classify_set(g, [u]).tag != HO
                            or analysis.classify_set(g, [v]).tag != HO
                        ):
                            continue
                        aux = edgecalc.star_aux(g, StarSpec([u], [v]), HO, HO)
                        counts = oracle.partition_counts(g, BitVector.ones(n), [u], [v])
                        assert counts.o1_o2 == counts.i1_i2
                        if aux.union_tag == AO:
                            assert counts.o1_o2 == 0
                        else:
                            assert counts.o1_o2 * ones_of[aux.union_tag] == counts.total
