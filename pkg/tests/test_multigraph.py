from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftmatroid._bits import bits, full_mask, popcount, to_mask
from liftmatroid.catalog import complete_graph, uniform
from liftmatroid.matroid import find_isomorphism
from liftmatroid.multigraph import (
    Multigraph,
    are_2_isomorphic,
    cosimplify_graph,
    cut_edges,
    cycle_matroid,
    cyclomatic,
    edge_classes,
    enumerate_cycles,
    graph_minor,
    one_sum,
    simplify_graph,
    subdivide,
    subdivision_profile,
    whitney_switch,
)
from strategies import graphs

K4 = complete_graph(4)
TRIANGLE = Multigraph(3, [(0, 1), (1, 2), (0, 2)])
THETA = Multigraph(2, [(0, 1)] * 3)


def brute_cycles(g: Multigraph) -> set[int]:
    """Edge sets whose subgraph is connected and 2-regular, by scanning all subsets."""
    out = set()
    for x in range(1, 1 << g.m):
        deg: dict[int, int] = {}
        for e in bits(x):
            u, v = g.edges[e]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        if all(d == 2 for d in deg.values()) and cyclomatic(g, x) == 1:
            out.add(x)
    return out


class TestCycles:
    def test_k4_has_seven_cycles(self):
        cycles = enumerate_cycles(K4)
        assert len(cycles) == 7
        assert sorted(map(popcount, cycles)) == [3, 3, 3, 3, 4, 4, 4]
        assert cycles == brute_cycles(K4)

    def test_two_loops(self):
        g = Multigraph(1, [(0, 0), (0, 0)])
        assert enumerate_cycles(g) == {0b01, 0b10}

    def test_k2_3(self):
        assert enumerate_cycles(THETA) == {0b011, 0b101, 0b110}

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=4, max_m=7))
    def test_matches_subset_oracle(self, g):
        assert enumerate_cycles(g) == brute_cycles(g)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5, max_m=7))
    def test_cycles_are_minimal_cyclomatic_one(self, g):
        for c in enumerate_cycles(g):
            assert cyclomatic(g, c) == 1
            els = list(bits(c))
            for k in range(1, len(els)):
                for sub in combinations(els, k):
                    assert cyclomatic(g, to_mask(sub)) == 0


def test_cyclomatic_examples():
    assert cyclomatic(K4, K4.all_edges) == 3
    assert cyclomatic(TRIANGLE, TRIANGLE.all_edges) == 1
    assert cyclomatic(K4, 0) == 0


class TestMinor:
    def test_contract_k4_edge(self):
        g, labels = graph_minor(K4, contract=1)
        assert (g.n, g.m) == (3, 5)
        pairs = [c for c in edge_classes(g).parallel]
        assert len(pairs) == 2 and all(popcount(c) == 2 for c in pairs)
        assert labels == (1, 2, 3, 4, 5)

    def test_delete_loop(self):
        g = Multigraph(2, [(0, 1), (1, 1)])
        h, labels = graph_minor(g, delete=0b10)
        assert h.n == 2 and h.edges == ((0, 1),) and labels == (0,)

    def test_contract_tree_of_cycle(self):
        h, _ = graph_minor(TRIANGLE, contract=0b011)
        assert h.n == 1 and h.edges == ((0, 0),)

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            graph_minor(K4, delete=1, contract=1)


class TestCutEdges:
    def test_path(self):
        p = Multigraph(4, [(0, 1), (1, 2), (2, 3)])
        assert cut_edges(p) == 0b111

    def test_theta(self):
        assert cut_edges(THETA) == 0

    def test_theta_plus_pendant(self):
        g = Multigraph(3, [(0, 1)] * 3 + [(1, 2)])
        assert cut_edges(g) == 0b1000


class TestReductions:
    def test_simplify_k2_4(self):
        g, labels = simplify_graph(Multigraph(2, [(0, 1)] * 4))
        assert g.edges == ((0, 1),) and labels == (0,)

    def test_simplify_k4_unchanged(self):
        g, labels = simplify_graph(K4)
        assert g == K4 and labels == tuple(range(6))

    def test_simplify_loop(self):
        g, labels = simplify_graph(Multigraph(1, [(0, 0)]))
        assert g.n == 1 and g.m == 0

    def test_cosimplify_subdivided_theta(self):
        # edges a, b parallel; c, d the subdivided third path
        g = Multigraph(3, [(0, 1), (0, 1), (0, 2), (2, 1)])
        h, labels = cosimplify_graph(g)
        assert h.n == 2 and h.m == 3 and labels == (0, 1, 2)

    def test_cosimplify_triangle(self):
        h, labels = cosimplify_graph(TRIANGLE)
        assert h.n == 1 and h.edges == ((0, 0),) and labels == (0,)

    def test_cosimplify_k2_4_unchanged(self):
        g = Multigraph(2, [(0, 1)] * 4)
        assert cosimplify_graph(g).graph == g

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5, max_m=7))
    def test_idempotent(self, g):
        s = simplify_graph(g).graph
        assert simplify_graph(s).graph == s
        c = cosimplify_graph(g).graph
        assert cosimplify_graph(c).graph == c

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5, max_m=7))
    def test_cosimplified_has_no_cut_edges(self, g):
        assert cut_edges(cosimplify_graph(g).graph) == 0


class TestEdgeClasses:
    def test_k2_4_subdivided(self):
        g = Multigraph(3, [(0, 1), (0, 1), (0, 1), (0, 2), (2, 1)])
        cls = edge_classes(g)
        assert cls.parallel == (0b00111,)
        assert cls.series == (0b11000,)

    def test_four_cycle(self):
        g = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        assert edge_classes(g).series == (0b1111,)

    def test_two_loops(self):
        cls = edge_classes(Multigraph(1, [(0, 0), (0, 0)]))
        assert cls.loops == 0b11 and cls.parallel == () and cls.series == ()


class TestWhitney:
    def test_four_cycle_antipodal(self):
        g = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        h = whitney_switch(g, 0b0011, 0, 2)
        assert enumerate_cycles(h) == enumerate_cycles(g)

    def test_two_triangles(self):
        # two triangles on the pair {0, 1}, plus the edge 0-1 on the first side
        g = Multigraph(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])
        h = whitney_switch(g, 0b00111, 0, 1)
        assert h != g
        assert enumerate_cycles(h) == enumerate_cycles(g)

    def test_whole_edge_set_rejected(self):
        g = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(ValueError):
            whitney_switch(g, g.all_edges, 0, 2)

    def test_wrong_vertex_pair_rejected(self):
        g = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        with pytest.raises(ValueError):
            whitney_switch(g, 0b0011, 0, 1)

    @settings(max_examples=80, deadline=None)
    @given(st.data())
    def test_random_switches_preserve_cycles(self, data):
        # glue two random graphs on two vertices, then switch one side
        a = data.draw(graphs(max_n=4, max_m=5, min_m=1))
        b = data.draw(graphs(max_n=4, max_m=5, min_m=1))
        if a.n < 2 or b.n < 2:
            return
        vmap = {0: 0, 1: 1}
        nxt = a.n
        for v in range(2, b.n):
            vmap[v] = nxt
            nxt += 1
        edges = list(a.edges) + [(vmap[u], vmap[v]) for u, v in b.edges]
        g = Multigraph(nxt, edges)
        part1 = full_mask(a.m)
        shared = g.vertices_of(part1) & g.vertices_of(g.all_edges & ~part1)
        if shared != {0, 1}:
            return
        h = whitney_switch(g, part1, 0, 1)
        assert enumerate_cycles(h) == enumerate_cycles(g)
        assert find_isomorphism(cycle_matroid(g), cycle_matroid(h)) is not None


class TestOneSum:
    def test_triangle_and_digon(self):
        g1 = Multigraph(3, [(0, 1), (1, 2), (0, 2), (0, 0)])
        g2 = Multigraph(2, [(0, 1), (0, 1), (1, 1)])
        g, labels = one_sum(g1, g2, 3, 2)
        assert (g.n, g.m) == (4, 5)
        assert labels == ((1, 0), (1, 1), (1, 2), (2, 0), (2, 1))
        tri, dig = 0b00111, 0b11000
        assert g.vertices_of(tri) & g.vertices_of(dig) == {0}

    def test_loops_only(self):
        g, labels = one_sum(Multigraph(1, [(0, 0)]), Multigraph(1, [(0, 0)]), 0, 0)
        assert g.n == 1 and g.m == 0 and labels == ()

    def test_link_marker_rejected(self):
        with pytest.raises(ValueError):
            one_sum(TRIANGLE, Multigraph(1, [(0, 0)]), 0, 0)


class TestSubdivisionProfile:
    def test_four_cycle(self):
        assert subdivision_profile(Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])) == ("K2n", 2)

    def test_k4(self):
        assert subdivision_profile(K4).kind == "K4"

    def test_theta_subdivided(self):
        g = THETA
        for e in range(3):
            g = subdivide(g, e)
        assert subdivision_profile(g) == ("K2n", 3)

    def test_subdivided_k4(self):
        assert subdivision_profile(subdivide(subdivide(K4, 0), 3)).kind == "K4"

    def test_neither(self):
        assert subdivision_profile(Multigraph(3, [(0, 1), (1, 2)])).kind == "neither"


class TestCycleMatroid:
    def test_k4(self):
        m = cycle_matroid(K4)
        assert m.rank == 3 and len(m.circuits) == 7

    def test_triangle_is_u23(self):
        assert cycle_matroid(TRIANGLE) == uniform(2, 3)

    def test_loop_is_u01(self):
        assert cycle_matroid(Multigraph(1, [(0, 0)])) == uniform(0, 1)

    def test_capacity(self):
        from liftmatroid.errors import CapacityError

        with pytest.raises(CapacityError):
            cycle_matroid(Multigraph(2, [(0, 1)] * 33))


class TestTwoIsomorphic:
    def test_relabelled_k4(self):
        perm = [2, 0, 3, 1]
        h = Multigraph(4, [(perm[u], perm[v]) for u, v in K4.edges])
        assert are_2_isomorphic(K4, h, labeled=False)

    def test_cycle_vs_path(self):
        c4 = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        p = Multigraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert not are_2_isomorphic(c4, p, labeled=False)

    def test_distinct_trees(self):
        star = Multigraph(4, [(0, 1), (0, 2), (0, 3)])
        path = Multigraph(4, [(0, 1), (1, 2), (2, 3)])
        assert are_2_isomorphic(star, path, labeled=False)

    def test_labeled_uses_cycle_family(self):
        g = Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        h = whitney_switch(g, 0b0011, 0, 2)
        assert are_2_isomorphic(g, h, labeled=True)
        assert not are_2_isomorphic(g, Multigraph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), labeled=True)


def test_multigraph_invariants():
    with pytest.raises(ValueError):
        Multigraph(2, [(0, 2)])
    g = Multigraph(3, [(2, 0)])
    assert g.edges == ((0, 2),)
    with pytest.raises(AttributeError):
        g.n = 4
