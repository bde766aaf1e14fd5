from __future__ import annotations

from itertools import combinations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liftmatroid._bits import bits, popcount, to_mask
from liftmatroid.catalog import (
    builtin_catalog,
    catalog_get,
    complete_graph,
    self_test,
    uniform,
    wheel_graph,
)
from liftmatroid.enumeration import enumerate_multigraphs
from liftmatroid.errors import CapacityError, MatroidAxiomError
from liftmatroid.lift import lift_matroid
from liftmatroid.matroid import (
    Matroid,
    are_clones,
    connectivity_order,
    contract_via_dual,
    cosimplify_matroid,
    direct_sum,
    dual,
    element_classes,
    find_isomorphism,
    from_circuits,
    has_minor_isomorphic,
    has_U25_restriction,
    is_isomorphic,
    iter_isomorphisms,
    matroid_minor,
    permute,
    rank_of,
    two_sum,
)
from liftmatroid.multigraph import Multigraph, cosimplify_graph, cycle_matroid
from strategies import matroids

F7 = catalog_get("F7")
MK4 = cycle_matroid(complete_graph(4))
U24 = uniform(2, 4)


def bases_dual_oracle(m: Matroid) -> set[int]:
    """Circuits of the dual from complements of bases, by brute force."""
    full = m.ground
    bases = [x for x in range(1 << m.n) if popcount(x) == m.rank and rank_of(m, x) == m.rank]
    co_bases = {full & ~b for b in bases}
    r = m.n - m.rank
    dep = [x for x in range(1, 1 << m.n) if not any(x & b == x for b in co_bases) or popcount(x) > r]
    out = []
    for x in sorted(dep, key=popcount):
        if not any(c & x == c for c in out):
            out.append(x)
    return set(out)


class TestConstruction:
    def test_single_circuit(self):
        assert from_circuits(3, [[0, 1, 2]]) == uniform(2, 3)

    def test_nested_rejected(self):
        with pytest.raises(MatroidAxiomError, match="nested"):
            from_circuits(2, [[0], [0, 1]])

    def test_all_triples(self):
        m = from_circuits(4, list(combinations(range(4), 3)))
        assert m == U24 and m.rank == 2

    def test_elimination_rejected(self):
        with pytest.raises(MatroidAxiomError, match="elimination"):
            from_circuits(4, [[0, 1], [1, 2, 3]])

    def test_capacity(self):
        with pytest.raises(CapacityError):
            from_circuits(33, [])

    def test_rank_plus_corank(self):
        for e in builtin_catalog():
            assert e.matroid.rank + e.matroid.corank == e.matroid.n


class TestRank:
    def test_examples(self):
        assert rank_of(U24, U24.ground) == 2
        assert rank_of(F7, F7.ground) == 3
        assert rank_of(F7, 0) == 0

    @pytest.mark.parametrize("name", ["F7", "MK4", "uniform(3,6)", "whirl(3)", "wheel(4)"])
    def test_submodular_and_unit_increase(self, name):
        m = catalog_get(name)
        table = [rank_of(m, x) for x in range(1 << m.n)]
        for x in range(1 << m.n):
            assert 0 <= table[x] <= popcount(x)
            for e in range(m.n):
                if not (x >> e) & 1:
                    assert table[x] <= table[x | (1 << e)] <= table[x] + 1
        for x, y in product(range(1 << m.n), repeat=2):
            assert table[x | y] + table[x & y] <= table[x] + table[y]

    @settings(max_examples=40, deadline=None)
    @given(matroids(), st.data())
    def test_submodular_random(self, m, data):
        x = data.draw(st.integers(0, m.ground))
        y = data.draw(st.integers(0, m.ground))
        assert rank_of(m, x | y) + rank_of(m, x & y) <= rank_of(m, x) + rank_of(m, y)


class TestDual:
    def test_u24_self_dual(self):
        assert dual(U24) == U24

    def test_u13(self):
        assert dual(uniform(1, 3)) == uniform(2, 3)

    def test_fano(self):
        assert not is_isomorphic(dual(F7), F7)
        assert is_isomorphic(dual(F7), catalog_get("F7dual"))

    @pytest.mark.parametrize("entry", builtin_catalog(), ids=lambda e: e.name)
    def test_involution_on_catalog(self, entry):
        m = entry.matroid
        d = dual(m)
        assert d.rank == m.n - m.rank
        assert dual(d) == m

    @settings(max_examples=60, deadline=None)
    @given(matroids())
    def test_involution_and_oracle(self, m):
        d = dual(m)
        assert set(d.circuits) == bases_dual_oracle(m)
        assert dual(Matroid(d.n, d.circuits)) == m


class TestMinors:
    def test_fano_deletions_are_mk4(self):
        for e in range(7):
            assert is_isomorphic(matroid_minor(F7, delete=1 << e).matroid, MK4)

    def test_identity(self):
        d = matroid_minor(F7)
        assert d.matroid == F7 and d.labels == tuple(range(7))

    def test_u24_contract(self):
        assert matroid_minor(U24, contract=1).matroid == uniform(1, 3)

    def test_overlap(self):
        with pytest.raises(ValueError):
            matroid_minor(U24, delete=1, contract=1)

    @pytest.mark.parametrize("name", ["F7", "whirl(3)", "uniform(3,6)"])
    def test_commute_exhaustive(self, name):
        m = catalog_get(name)
        for labels in product(range(3), repeat=m.n):
            dele = to_mask(i for i, t in enumerate(labels) if t == 1)
            con = to_mask(i for i, t in enumerate(labels) if t == 2)
            both = matroid_minor(m, delete=dele, contract=con)
            d1, l1 = matroid_minor(m, delete=dele)
            con1 = to_mask(l1.index(i) for i in bits(con))
            step = matroid_minor(d1, contract=con1)
            assert step.matroid == both.matroid
            c1, l2 = matroid_minor(m, contract=con)
            del2 = to_mask(l2.index(i) for i in bits(dele))
            assert matroid_minor(c1, delete=del2).matroid == both.matroid

    @settings(max_examples=60, deadline=None)
    @given(matroids(), st.data())
    def test_contraction_routes_agree(self, m, data):
        c = data.draw(st.integers(0, m.ground))
        assert matroid_minor(m, contract=c) == contract_via_dual(m, c)


class TestSums:
    def test_direct_sum_with_loop(self):
        m = direct_sum(U24, uniform(0, 1))
        assert m.n == 5 and m.rank == 2
        assert sorted(map(popcount, m.circuits)) == [1, 3, 3, 3, 3]
        assert 1 << 4 in m.circuits

    def test_direct_sum_empty(self):
        assert direct_sum(F7, uniform(0, 0)) == F7

    def test_free(self):
        m = direct_sum(uniform(1, 1), uniform(1, 1))
        assert m.circuits == () and m.rank == 2

    def test_two_sum_examples(self):
        a = two_sum(U24, uniform(2, 3), 0, 0)
        assert (a.n, a.rank) == (5, 3)
        b = two_sum(U24, U24, 0, 0)
        assert (b.n, b.rank) == (6, 3)

    def test_two_sum_coloop_rejected(self):
        with pytest.raises(ValueError):
            two_sum(U24, direct_sum(uniform(1, 2), uniform(1, 1)), 0, 2)

    def test_two_sum_rank_formula(self):
        names = ["uniform(1,3)", "uniform(2,4)", "uniform(2,3)", "F7", "MK4", "whirl(3)", "uniform(3,5)"]
        for n1, n2 in combinations(names, 2):
            m1, m2 = catalog_get(n1), catalog_get(n2)
            if m1.n + m2.n - 2 > 12:
                continue
            s = two_sum(m1, m2, 0, 0)
            assert s.rank == m1.rank + m2.rank - 1
            assert from_circuits(s.n, s.circuits) == s


class TestConnectivity:
    def test_u24(self):
        assert connectivity_order(U24).kind == "three_connected"

    def test_loop_sum(self):
        assert connectivity_order(direct_sum(U24, uniform(0, 1))).kind == "disconnected"

    def test_two_sum_separation(self):
        m = two_sum(U24, uniform(2, 3), 0, 0)
        c = connectivity_order(m)
        assert c.kind == "connected_not_3"
        x, y = c.separation
        assert x | y == m.ground and x & y == 0 and x & 1
        assert popcount(x) >= 2 and popcount(y) >= 2
        assert rank_of(m, x) + rank_of(m, y) - m.rank <= 1

    @settings(max_examples=40, deadline=None)
    @given(matroids())
    def test_three_connected_has_no_small_classes(self, m):
        if m.n >= 4 and connectivity_order(m).kind == "three_connected":
            cls = element_classes(m)
            assert not cls.loops and not cls.coloops and not cls.parallel and not cls.series


class TestClasses:
    def test_four_cycle(self):
        c4 = cycle_matroid(Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
        assert element_classes(c4).series == (0b1111,)

    def test_k2_3(self):
        assert element_classes(cycle_matroid(Multigraph(2, [(0, 1)] * 3))).parallel == (0b111,)

    def test_u24(self):
        cls = element_classes(U24)
        assert cls == (0, 0, (), ())


class TestCosimplify:
    def test_four_cycle(self):
        c4 = cycle_matroid(Multigraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)]))
        d = cosimplify_matroid(c4)
        assert d.matroid == uniform(0, 1) and d.labels == (0,)

    def test_u24(self):
        assert cosimplify_matroid(U24).matroid == U24

    def test_coloop(self):
        assert cosimplify_matroid(uniform(1, 1)).matroid.n == 0

    def test_agrees_with_graph_side(self):
        # every canonical graph with n <= 5 and m <= 8
        for n in range(1, 6):
            for m in range(0, 9):
                for g in enumerate_multigraphs(n, m):
                    a = cosimplify_matroid(cycle_matroid(g)).matroid
                    b = cycle_matroid(cosimplify_graph(g).graph)
                    assert is_isomorphic(a, b), g


class TestIsomorphism:
    def test_lift_of_k2_4(self):
        assert find_isomorphism(lift_matroid(Multigraph(2, [(0, 1)] * 4)), U24) is not None

    def test_fano_dual(self):
        assert find_isomorphism(F7, dual(F7)) is None

    def test_self(self):
        p = find_isomorphism(F7, F7)
        assert permute(F7, p) == F7

    def test_automorphism_counts(self):
        assert sum(1 for _ in iter_isomorphisms(F7, F7)) == 168
        assert sum(1 for _ in iter_isomorphisms(U24, U24)) == 24

    @settings(max_examples=40, deadline=None)
    @given(matroids(), st.permutations(range(7)))
    def test_finds_relabelling(self, m, perm):
        p = tuple(x for x in perm if x < m.n)
        h = permute(m, p)
        iso = find_isomorphism(m, h)
        assert iso is not None and permute(m, iso) == h


class TestMinorSearch:
    def test_trivial(self):
        w = has_minor_isomorphic(U24, U24)
        assert w.delete == 0 and w.contract == 0

    def test_binary_has_no_u24(self):
        assert has_minor_isomorphic(F7, U24) is None
        assert has_minor_isomorphic(catalog_get("dualK5"), U24) is None

    def test_witness_reproduces_target(self):
        m = catalog_get("whirl(4)")
        w = has_minor_isomorphic(m, U24)
        minor = matroid_minor(m, delete=w.delete, contract=w.contract)
        assert is_isomorphic(minor.matroid, U24)

    def test_forced_element(self):
        m = catalog_get("whirl(3)")
        for e in range(m.n):
            w = has_minor_isomorphic(m, U24, keep=e)
            assert w is not None and not ((w.delete | w.contract) >> e) & 1


class TestClones:
    def test_u24(self):
        assert all(are_clones(U24, x, y) for x, y in combinations(range(4), 2))

    def test_loop_vs_point(self):
        assert not are_clones(direct_sum(U24, uniform(0, 1)), 4, 0)

    def test_subdivided_k2_4(self):
        g = Multigraph(3, [(0, 1), (0, 1), (0, 1), (0, 2), (2, 1)])
        m = lift_matroid(g)
        assert are_clones(m, 0, 1)
        assert not are_clones(m, 0, 3)


class TestCatalog:
    def test_self_test(self):
        assert self_test() == []

    def test_fano(self):
        assert (F7.n, F7.rank, len(F7.circuits)) == (7, 3, 14)
        assert sorted(map(popcount, F7.circuits)) == [3] * 7 + [4] * 7

    def test_whirl2(self):
        assert is_isomorphic(catalog_get("whirl(2)"), U24)

    def test_dual_k5(self):
        assert catalog_get("dualK5") == dual(cycle_matroid(complete_graph(5)))

    def test_wheel(self):
        assert catalog_get("wheel(4)") == cycle_matroid(wheel_graph(4))

    def test_unknown(self):
        with pytest.raises(KeyError):
            catalog_get("nope")


class TestU25Restriction:
    def test_examples(self):
        assert has_U25_restriction(uniform(2, 5))
        assert not has_U25_restriction(F7)
        assert not has_U25_restriction(U24)

    @settings(max_examples=40, deadline=None)
    @given(matroids())
    def test_matches_subset_scan(self, m):
        def scan():
            for s in combinations(range(m.n), 5):
                x = to_mask(s)
                if rank_of(m, x) == 2 and all(
                    rank_of(m, to_mask(t)) == 2 for t in combinations(s, 3)
                ) and all(rank_of(m, to_mask(t)) == 2 for t in combinations(s, 2)):
                    return True
            return False

        assert has_U25_restriction(m) == scan()
