from __future__ import annotations

from itertools import combinations

import pytest

from gbei.graphs import (
    Graph,
    GraphParseError,
    classify,
    clique_complex,
    components_within,
    connected_components,
    cut_set_census,
    enumerate_connected_graphs,
    induced_subgraph,
    is_chordal,
    is_connected,
    is_path,
    leaf_decomposition,
    parse_graph,
)

from conftest import C4, CHERRY, FAN, K2, K3, K4, P3, P5, STAR, graph_of


# ---------------------------------------------------------------------------
# independent reference implementations used only for cross-checking

def brute_chordal(g: Graph) -> bool:
    """No induced cycle of length >= 4, checked subset by subset."""
    for size in range(4, g.n + 1):
        for vs in combinations(range(1, g.n + 1), size):
            inside = set(vs)
            deg = {v: sum(1 for u in inside if u != v and tuple(sorted((u, v))) in g.edges) for v in vs}
            if any(d != 2 for d in deg.values()):
                continue
            # all degrees 2: a disjoint union of cycles; connected means one cycle
            sub, _ = induced_subgraph(g, vs)
            if is_connected(sub):
                return False
    return True


def brute_facets(g: Graph) -> set[frozenset[int]]:
    cliques = []
    for size in range(1, g.n + 1):
        for vs in combinations(range(1, g.n + 1), size):
            if all(tuple(sorted((u, v))) in g.edges for u, v in combinations(vs, 2)):
                cliques.append(frozenset(vs))
    return {c for c in cliques if not any(c < d for d in cliques)}


def all_graphs(n: int):
    slots = list(combinations(range(1, n + 1), 2))
    for bits in range(1 << len(slots)):
        yield Graph.from_edges(n, [slots[i] for i in range(len(slots)) if bits >> i & 1])


class TestParsing:
    def test_roundtrip_with_comments_and_blanks(self):
        g = parse_graph("# a path\n\n3\n1 2\n\n2 3\n")
        assert g == P3

    def test_vertex_count_errors(self):
        with pytest.raises(GraphParseError) as err:
            parse_graph("zero\n")
        assert err.value.line == 1
        with pytest.raises(GraphParseError):
            parse_graph("0\n")
        with pytest.raises(GraphParseError):
            parse_graph("# only a comment\n")

    def test_edge_errors_carry_line_numbers(self):
        with pytest.raises(GraphParseError) as err:
            parse_graph("3\n1 2\n1 2 3\n")
        assert err.value.line == 3
        with pytest.raises(GraphParseError):
            parse_graph("3\n1 4\n")
        with pytest.raises(GraphParseError):
            parse_graph("3\n2 2\n")
        with pytest.raises(GraphParseError):
            parse_graph("3\n1 x\n")

    def test_duplicate_edges_collapse(self):
        assert parse_graph("3\n1 2\n2 1\n2 3\n") == P3


class TestChordality:
    def test_agrees_with_brute_force_up_to_six_vertices(self):
        for n in range(1, 7):
            for g in all_graphs(n):
                assert is_chordal(g)[0] == brute_chordal(g), g

    def test_perfect_elimination_order_witness(self):
        ok, order = is_chordal(P5)
        assert ok and sorted(order) == [1, 2, 3, 4, 5]
        ok, order = is_chordal(C4)
        assert not ok and order is None


class TestCliqueComplex:
    def test_facets_match_exhaustive_search_small(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                assert set(clique_complex(g).facets) == brute_facets(g), g

    def test_facets_match_exhaustive_search_chordal_n6(self):
        for g in enumerate_connected_graphs(6, "chordal"):
            assert set(clique_complex(g).facets) == brute_facets(g), g

    def test_leaf_order_examples(self):
        def last_leaf(g):
            cc = clique_complex(g)
            return cc.facets[cc.leaf_order[-1]]

        # K_3 is a single facet
        assert clique_complex(K3).facets == (frozenset({1, 2, 3}),)
        assert last_leaf(P3) == frozenset({2, 3})
        # glued triangles: pairwise facet intersections all equal {1,2}
        cc = clique_complex(FAN)
        assert set(cc.facets) == {frozenset(s) for s in ({1, 2, 3}, {1, 2, 4}, {1, 2, 5})}
        assert last_leaf(FAN) == frozenset({1, 2, 5})
        assert last_leaf(STAR) == frozenset({1, 4})

    def test_leaf_order_is_valid_peeling(self):
        # every prefix of the order ends in a facet meeting the earlier ones
        # inside a single earlier facet
        for g in enumerate_connected_graphs(5, "chordal"):
            cc = clique_complex(g)
            order = [cc.facets[i] for i in cc.leaf_order]
            for k in range(1, len(order)):
                meet = frozenset().union(
                    *(order[k] & prev for prev in order[:k])
                )
                assert any(meet <= prev for prev in order[:k]), g
        assert clique_complex(C4).leaf_order is None


class TestClassification:
    def test_trees_are_block_graphs(self):
        for g in (K2, P3, STAR, P5):
            c = classify(g)
            assert c.chordal and c.block_graph and c.generalized_block_graph
            assert c.clique_number == 2

    def test_glued_triangles_are_generalized_but_not_block(self):
        c = classify(FAN)
        assert c.chordal and not c.block_graph and c.generalized_block_graph
        assert c.clique_number == 3

    def test_four_cycle_is_nothing(self):
        c = classify(C4)
        assert not c.chordal and not c.block_graph and not c.generalized_block_graph
        assert c.clique_number == 2

    def test_implication_chain(self):
        for n in range(1, 6):
            for g in all_graphs(n):
                c = classify(g)
                if c.block_graph:
                    assert c.generalized_block_graph
                if c.generalized_block_graph:
                    assert c.chordal

    def test_block_iff_generalized_with_no_large_cut_sets(self):
        for n in range(2, 6):
            for g in enumerate_connected_graphs(n):
                c = classify(g)
                census = cut_set_census(g)
                rhs = c.generalized_block_graph and all(census.a(i) == 0 for i in range(2, n + 1))
                assert c.block_graph == rhs, g


class TestCutSetCensus:
    def test_path_on_five(self):
        census = cut_set_census(P5)
        assert census.a(1) == 3
        assert set(census.minimal_cut_sets[1]) == {frozenset({2}), frozenset({3}), frozenset({4})}
        assert all(census.a(i) == 0 for i in range(2, 5))
        sets = set(census.cut_point_sets)
        assert {frozenset(), frozenset({2}), frozenset({3}), frozenset({4}), frozenset({2, 4})} <= sets
        assert census.component_counts[frozenset({2, 4})] == 3
        assert frozenset({2, 3}) not in sets

    def test_complete_graphs_have_no_cut_sets(self):
        for g in (K3, K4):
            census = cut_set_census(g)
            assert not census.minimal_cut_sets
            assert census.cut_point_sets == (frozenset(),)

    def test_glued_triangles_census(self):
        census = cut_set_census(FAN)
        assert census.a(1) == 0 and census.a(2) == 1
        assert census.minimal_cut_sets[2] == (frozenset({1, 2}),)
        assert census.clique_number == 3

    def test_minimal_cut_sets_are_facet_intersections_on_gblocks(self):
        # nonempty pairwise intersections of distinct maximal cliques
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n, "gblock"):
                census = cut_set_census(g)
                got = {s for sets in census.minimal_cut_sets.values() for s in sets}
                facets = clique_complex(g).facets
                want = set()
                for a, b in combinations(facets, 2):
                    inter = a & b
                    if inter:
                        want.add(inter)
                assert got == want, g

    def test_size_guard(self):
        with pytest.raises(ValueError):
            cut_set_census(Graph.from_edges(21, [(1, 2)]))


class TestComponents:
    def test_connected_components_sorted(self):
        g = graph_of(5, (2, 4), (3, 5))
        assert connected_components(g) == ((1,), (2, 4), (3, 5))
        assert not is_connected(g)
        assert is_connected(P5)

    def test_components_within(self):
        assert components_within(P5, [1, 2, 4, 5]) == ((1, 2), (4, 5))
        assert components_within(P5, []) == ()

    def test_induced_subgraph_relabels_in_order(self):
        sub, relabel = induced_subgraph(P5, [2, 3, 5])
        assert relabel == {2: 1, 3: 2, 5: 3}
        assert sub == graph_of(3, (1, 2))

    def test_path_recognition(self):
        assert is_path(P5) and is_path(K2) and is_path(graph_of(1))
        assert not is_path(K3)
        assert not is_path(STAR)
        assert not is_path(graph_of(4, (1, 2), (3, 4)))  # disconnected


class TestLeafDecomposition:
    def test_path_example(self):
        sp = leaf_decomposition(P3)
        assert sp.leaf == frozenset({2, 3})
        assert sp.cut == frozenset({2}) and sp.alpha == 1 and sp.q == 1
        assert sp.merged == K3
        assert connected_components(sp.minus_cut) == ((1,), (2,))

    def test_glued_triangles_example(self):
        sp = leaf_decomposition(FAN)
        assert sp.leaf == frozenset({1, 2, 5})
        assert sp.cut == frozenset({1, 2}) and sp.alpha == 2 and sp.q == 2
        assert sp.merged.edges == frozenset(
            (u, v) for u, v in combinations(range(1, 6), 2)
        )
        assert connected_components(sp.minus_cut) == ((1,), (2,), (3,))

    def test_star_example(self):
        sp = leaf_decomposition(STAR)
        assert sp.leaf == frozenset({1, 4})
        assert sp.cut == frozenset({1}) and sp.q == 2
        assert set(sp.branches) == {frozenset({1, 2}), frozenset({1, 3})}
        assert connected_components(sp.minus_cut) == ((1,), (2,), (3,))

    def test_rejects_simplices_and_non_gblock(self):
        with pytest.raises(ValueError):
            leaf_decomposition(K3)
        with pytest.raises(ValueError):
            leaf_decomposition(C4)
        with pytest.raises(ValueError):
            leaf_decomposition(graph_of(4, (1, 2), (3, 4)))

    def test_derived_graphs_stay_generalized_block(self):
        for n in range(3, 6):
            for g in enumerate_connected_graphs(n, "gblock"):
                if len(clique_complex(g).facets) < 2:
                    continue
                sp = leaf_decomposition(g)
                for h in (sp.merged, sp.minus_cut, sp.merged_minus_cut):
                    parts = [induced_subgraph(h, comp)[0] for comp in connected_components(h)]
                    assert all(classify(p).generalized_block_graph for p in parts), g

    def test_removed_cut_leaves_q_plus_one_components(self):
        for n in range(3, 6):
            for g in enumerate_connected_graphs(n, "gblock"):
                if len(clique_complex(g).facets) < 2:
                    continue
                sp = leaf_decomposition(g)
                assert len(connected_components(sp.minus_cut)) == sp.q + 1, g

    def test_census_transfer_as_set_collections(self):
        # the three derived graphs shift the minimal-cut-set collections in
        # lockstep: merged graphs drop exactly the splitting cut, the
        # restriction keeps everything away from it
        for n in range(3, 6):
            for g in enumerate_connected_graphs(n, "gblock"):
                if len(clique_complex(g).facets) < 2:
                    continue
                sp = leaf_decomposition(g)
                back = {new: old for old, new in sp.relabel.items()}
                census = cut_set_census(g)
                full = {s for ss in census.minimal_cut_sets.values() for s in ss}
                merged = {
                    s
                    for ss in cut_set_census(sp.merged).minimal_cut_sets.values()
                    for s in ss
                }
                assert merged == full - {sp.cut}, g
                restricted = {
                    frozenset(back[v] for v in s)
                    for ss in cut_set_census(sp.merged_minus_cut).minimal_cut_sets.values()
                    for s in ss
                }
                assert restricted == full - {sp.cut}, g
                remainder = {
                    frozenset(back[v] for v in s)
                    for ss in cut_set_census(sp.minus_cut).minimal_cut_sets.values()
                    for s in ss
                }
                assert remainder <= full - {sp.cut}, g


class TestEnumeration:
    def test_counts(self):
        assert sum(1 for _ in enumerate_connected_graphs(3)) == 4
        assert sum(1 for _ in enumerate_connected_graphs(4)) == 38
        assert sum(1 for _ in enumerate_connected_graphs(4, "chordal")) == 35
        assert sum(1 for _ in enumerate_connected_graphs(4, "gblock")) == 35
        assert sum(1 for _ in enumerate_connected_graphs(4, "block")) == 29
        assert sum(1 for _ in enumerate_connected_graphs(5, "gblock")) == 421

    def test_filter_semantics(self):
        for g in enumerate_connected_graphs(4, "block"):
            assert classify(g).block_graph
        for g in enumerate_connected_graphs(4):
            assert is_connected(g)

    def test_guards(self):
        with pytest.raises(ValueError):
            list(enumerate_connected_graphs(8))
        with pytest.raises(ValueError):
            list(enumerate_connected_graphs(4, "weird"))
