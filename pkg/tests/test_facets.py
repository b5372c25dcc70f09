"""Facet enumeration, layerings, weights, cuts."""

import itertools
import random
from fractions import Fraction

import pytest

from symedge import Graph, default_ribbon
from symedge.facets import (
    FacetGraph,
    classify_cut,
    classify_tail_edges,
    enumerate_facet_graphs,
    facet_conormal,
    facet_system,
    facet_value,
    first_facet_graph,
    is_directed_cut,
    is_semi_balanced,
    make_weight_function,
)
from symedge.geometry import edge_vector

from fixture_graphs import (
    BIPARTITE7_GOOD_HEADS,
    BIPARTITE7_GOOD_TAILS,
    BIPARTITE7_STANDARD_LAYERING,
    BIPARTITE7_TREE_GOOD,
    MEDIUM_FIXTURES,
    bipartite7,
    complete_bipartite,
    cycle_graph,
    diamond_graph,
    path_graph,
    star_graph,
)


def brute_force_facet_layerings(g: Graph, base: int) -> set[tuple[int, ...]]:
    """Independent enumeration: try every orientation-with-hidden assignment.

    An assignment is a facet exactly when the oriented edges span
    connectedly and a vertex potential exists that steps by one along
    every arc and is constant across every hidden edge.
    """
    out = set()
    for signs in itertools.product((-1, 0, 1), repeat=g.m):
        adj = [[] for _ in range(g.n)]
        for eid, s in enumerate(signs):
            u, v = g.endpoints(eid)
            adj[u].append((v, s))
            adj[v].append((u, -s))
        lay = [None] * g.n
        lay[base] = 0
        queue = [base]
        ok = True
        for x in queue:
            for y, d in adj[x]:
                if lay[y] is None:
                    lay[y] = lay[x] + d
                    queue.append(y)
                elif lay[y] != lay[x] + d:
                    ok = False
        if not ok or any(l is None for l in lay):
            continue
        # arcs alone must span connectedly
        from symedge.graphs import UnionFind

        uf = UnionFind(g.n)
        for eid, s in enumerate(signs):
            if s != 0:
                uf.union(*g.endpoints(eid))
        if uf.components == 1:
            out.add(tuple(lay))
    return out


class TestEnumeration:
    @pytest.mark.parametrize(
        "graph,count",
        [
            (path_graph(2), 2),
            (path_graph(3), 4),
            (cycle_graph(4), 6),
            (cycle_graph(5), 30),
        ],
    )
    def test_known_counts(self, graph, count):
        assert len(enumerate_facet_graphs(graph)) == count

    def test_tree_has_all_orientations(self):
        g = path_graph(4)
        assert len(enumerate_facet_graphs(g)) == 2**g.m

    @pytest.mark.parametrize("name", sorted(MEDIUM_FIXTURES))
    def test_matches_orientation_brute_force(self, name):
        g = MEDIUM_FIXTURES[name]()
        got = {f.layering for f in enumerate_facet_graphs(g)}
        assert got == brute_force_facet_layerings(g, 0)

    @pytest.mark.parametrize("graph", [cycle_graph(4), cycle_graph(6), complete_bipartite(2, 3)])
    def test_bipartite_facets_are_full_orientations(self, graph):
        facets = enumerate_facet_graphs(graph)
        assert all(not f.hidden_edges for f in facets)
        balanced = 0
        for signs in itertools.product((1, -1), repeat=graph.m):
            arcs = []
            for eid, s in enumerate(signs):
                u, v = graph.endpoints(eid)
                arcs.append((u, v) if s == 1 else (v, u))
            if is_semi_balanced(graph.n, arcs) is not None:
                balanced += 1
        assert balanced == len(facets)

    def test_ids_follow_decreasing_weight(self):
        g = cycle_graph(4)
        facets, weight = facet_system(g, 0)
        values = [facet_value(f, weight) for f in facets]
        assert values == sorted(values, reverse=True)
        assert [f.index for f in facets] == list(range(1, 7))

    def test_recovered_layering_matches(self):
        for name in sorted(MEDIUM_FIXTURES):
            g = MEDIUM_FIXTURES[name]()
            for f in enumerate_facet_graphs(g):
                arcs = [(t, h) for _, t, h in f.arcs]
                assert is_semi_balanced(g.n, arcs) == f.layering


class TestSemiBalance:
    def test_directed_triangle_is_not(self):
        assert is_semi_balanced(3, [(0, 1), (1, 2), (2, 0)]) is None

    def test_alternating_square_is(self):
        lay = is_semi_balanced(4, [(0, 1), (2, 1), (2, 3), (0, 3)])
        assert lay == (0, 1, 0, 1)

    def test_planar_example_is(self):
        g, _, _ = bipartite7()
        fg = FacetGraph(g, BIPARTITE7_STANDARD_LAYERING)
        arcs = [(t, h) for _, t, h in fg.arcs]
        assert is_semi_balanced(g.n, arcs) == BIPARTITE7_STANDARD_LAYERING

    def test_disconnected_raises(self):
        with pytest.raises(ValueError, match="connect"):
            is_semi_balanced(4, [(0, 1)])


class TestFirstFacet:
    def test_k2(self):
        f = first_facet_graph(path_graph(2), 0)
        assert f.layering == (0, -1)
        assert f.arc(0) == (1, 0)

    def test_star_all_toward_center(self):
        g = star_graph(3)
        f = first_facet_graph(g, 0)
        assert all(h == 0 for _, _, h in f.arcs)

    def test_c4(self):
        f = first_facet_graph(cycle_graph(4), 0)
        assert f.layering == (0, -1, -2, -1)
        assert f.arc(0) == (1, 0) and f.arc(3) == (3, 0)
        assert f.arc(1) == (2, 1) and f.arc(2) == (2, 3)

    def test_is_the_maximum(self):
        for name in sorted(MEDIUM_FIXTURES):
            g = MEDIUM_FIXTURES[name]()
            facets, _ = facet_system(g, 0)
            assert facets[0].layering == first_facet_graph(g, 0).layering


class TestWeightFunction:
    def test_two_vertices_forced(self):
        w = make_weight_function(path_graph(2), 0)
        assert w.values == (Fraction(1), Fraction(-1))

    def test_sums(self):
        for name in sorted(MEDIUM_FIXTURES):
            g = MEDIUM_FIXTURES[name]()
            w = make_weight_function(g, 0, seed=7)
            assert sum(w.values) == 0
            assert w.values[0] == 1
            assert all(-1 <= x <= 0 for v, x in enumerate(w.values) if v != 0)

    def test_facet_values_distinct(self):
        g = cycle_graph(4)
        facets, w = facet_system(g, 0)
        values = [facet_value(f, w) for f in facets]
        assert len(set(values)) == len(values)

    def test_shift_invariance(self):
        g = cycle_graph(4)
        facets, w = facet_system(g, 0)
        f = facets[2]
        shifted = tuple(l + 7 for l in f.layering)
        manual = sum((Fraction(l) * x for l, x in zip(shifted, w.values)), Fraction(0))
        assert manual == facet_value(f, w)

    def test_k2_values(self):
        g = path_graph(2)
        w = make_weight_function(g, 0)
        up = FacetGraph(g, (0, 1))
        down = FacetGraph(g, (0, -1))
        assert facet_value(up, w) == -1
        assert facet_value(down, w) == 1


class TestConormal:
    @pytest.mark.parametrize("name", sorted(MEDIUM_FIXTURES))
    def test_separates_polytope(self, name):
        g = MEDIUM_FIXTURES[name]()
        for f in enumerate_facet_graphs(g):
            lay = facet_conormal(f)
            assert sum(lay[i] * 0 for i in range(g.n)) == 0  # origin strictly inside
            best = set()
            for eid in range(g.m):
                u, v = g.endpoints(eid)
                for tail, head in ((u, v), (v, u)):
                    vec = edge_vector(tail, head, g.n)
                    val = sum(l * x for l, x in zip(lay, vec))
                    assert val <= 1
                    if val == 1:
                        best.add((tail, head))
            assert best == {(t, h) for _, t, h in f.arcs}


class TestTailEdges:
    def test_planar_example(self):
        g, _, _ = bipartite7()
        fg = FacetGraph(g, BIPARTITE7_STANDARD_LAYERING)
        tails = classify_tail_edges(fg, BIPARTITE7_TREE_GOOD, 0)
        assert tails == BIPARTITE7_GOOD_TAILS
        assert BIPARTITE7_TREE_GOOD - tails == BIPARTITE7_GOOD_HEADS

    def test_k2_both_ways(self):
        g = path_graph(2)
        assert classify_tail_edges(FacetGraph(g, (0, 1)), frozenset({0}), 0) == {0}
        assert classify_tail_edges(FacetGraph(g, (0, -1)), frozenset({0}), 0) == frozenset()

    def test_outward_path(self):
        g = path_graph(3)
        fg = FacetGraph(g, (0, 1, 2))
        assert classify_tail_edges(fg, frozenset({0, 1}), 0) == {0, 1}


class TestDirectedCut:
    def test_single_edge(self):
        g = path_graph(2)
        fg = FacetGraph(g, (0, 1))
        assert is_directed_cut(fg, frozenset({0}), frozenset({1})) == "toward-side1"

    def test_source_sink_split_is_directed(self):
        g = cycle_graph(4)
        fg = FacetGraph(g, (0, 1, 0, 1))  # sources 0,2 sinks 1,3
        assert is_directed_cut(fg, frozenset({0, 2}), frozenset({1, 3})) == "toward-side1"

    def test_mixed_split_is_undirected(self):
        g = cycle_graph(4)
        fg = FacetGraph(g, (0, 1, 0, 1))
        assert is_directed_cut(fg, frozenset({0, 1}), frozenset({2, 3})) == "undirected"

    def test_empty_cut(self):
        # an oriented subgraph with no arc across the split
        assert classify_cut(4, [(0, 1), (2, 3)], frozenset({0, 1}), frozenset({2, 3})) == "empty"

    def test_bad_partition_raises(self):
        g = path_graph(3)
        fg = FacetGraph(g, (0, 1, 2))
        with pytest.raises(ValueError):
            is_directed_cut(fg, frozenset({0}), frozenset({0, 1, 2}))
        with pytest.raises(ValueError):
            is_directed_cut(fg, frozenset(), frozenset({0, 1, 2}))


class TestOrderLemmas:
    """Exhaustive fixture checks of the two facet-comparison lemmas."""

    def _bipartitions(self, n):
        verts = range(1, n)
        for r in range(0, n):
            for others in itertools.combinations(verts, r):
                side0 = frozenset({0, *others})
                side1 = frozenset(range(n)) - side0
                if side1:
                    yield side0, side1

    @pytest.mark.parametrize("name", ["P3", "C4", "C5", "diamond", "K4"])
    def test_outward_cut_has_better_facet(self, name, request):
        g = MEDIUM_FIXTURES[name]()
        facets, w = facet_system(g, 0)
        for f in facets:
            for side0, side1 in self._bipartitions(g.n):
                if is_directed_cut(f, side0, side1) != "toward-side1":
                    continue
                candidates = []
                for other in facets:
                    if facet_value(other, w) <= facet_value(f, w):
                        continue
                    if is_directed_cut(other, side0, side1) != "toward-side0":
                        continue
                    same_side_ok = True
                    for eid, t, h in f.arcs:
                        crosses = (t in side0) != (h in side0)
                        if not crosses and other.arc(eid) != (t, h):
                            same_side_ok = False
                            break
                    if same_side_ok:
                        candidates.append(other)
                assert candidates, f"no better facet across cut {side0} of {f.layering}"

    @pytest.mark.parametrize("name", ["P3", "C4", "C5", "diamond", "K4"])
    def test_ranked_facets_cross_an_opposing_cut(self, name):
        g = MEDIUM_FIXTURES[name]()
        facets, w = facet_system(g, 0)
        for hi, lo in itertools.combinations(facets, 2):  # hi has larger value
            found = False
            for side0, side1 in self._bipartitions(g.n):
                if (
                    is_directed_cut(lo, side0, side1) == "toward-side1"
                    and is_directed_cut(hi, side0, side1) == "toward-side0"
                ):
                    found = True
                    break
            assert found, f"no opposing cut for {hi.layering} > {lo.layering}"
