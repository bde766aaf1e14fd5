"""Mechanical checks of structural facts about lift matroids over explicit families.

Each row of :data:`ROWS` pairs an instance family (exhaustive at small
size, plus a seeded random extension) with a predicate.  Instances are
plain JSON-compatible objects so that any counterexample can be replayed
later through :func:`replay`.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from ._bits import bits, full_mask, popcount, to_mask
from .catalog import catalog_get, complete_graph, uniform
from .enumeration import Constraints, canonical_form, canonical_graph, enumerate_multigraphs
from .errors import ResourceError
from .lift import lift_matroid
from .matroid import (
    Matroid,
    connectivity_order,
    cosimplify_matroid,
    dual,
    element_classes,
    find_isomorphism,
    has_minor_isomorphic,
    is_connected as matroid_connected,
    iter_isomorphisms,
    matroid_minor,
    max_line_size,
    restriction,
    two_sum,
)
from .membership import biclift_witness, group_by_2_isomorphism, is_graphic
from .multigraph import (
    Multigraph,
    cosimplify_graph,
    enumerate_cycles,
    parallel_classes,
    series_classes,
    subdivide,
    subdivision_profile,
)
from .realize import DEFAULT_CAPS, Caps, search_lift

U24 = uniform(2, 4)


@dataclass(frozen=True)
class LemmaBudget:
    """Resources for one verification run.

    ``max_instances`` bounds every family; a family that would be larger
    raises :class:`ResourceError` instead of being truncated.
    """

    caps: Caps = DEFAULT_CAPS
    max_instances: int = 100_000
    random_instances: int = 10


DEFAULT_BUDGET = LemmaBudget()


@dataclass
class LemmaReport:
    lemma_id: str
    family_params: dict
    instances_checked: int
    counterexamples: list = field(default_factory=list)
    elapsed_ms: Optional[int] = None
    expected_failure: bool = False
    passed: bool = False
    error: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "family_params": self.family_params,
            "instances_checked": self.instances_checked,
            "counterexamples": self.counterexamples,
            "elapsed_ms": self.elapsed_ms,
            "expected_failure": self.expected_failure,
            "passed": self.passed,
            "error": self.error,
        }


# ------------------------------------------------------------ serialization


def graph_to_obj(g: Multigraph) -> list:
    return [g.n, [list(e) for e in g.edges]]


def graph_from_obj(obj) -> Multigraph:
    n, edges = obj
    return Multigraph(n, [tuple(e) for e in edges])


def matroid_to_obj(m: Matroid) -> list:
    return [m.n, [list(bits(c)) for c in m.circuits]]


def matroid_from_obj(obj) -> Matroid:
    n, circuits = obj
    return Matroid(n, [to_mask(c) for c in circuits])


# ----------------------------------------------------------------- families


def _graphs(n_max: int, m_max: int, constraints: Constraints, n_min: int = 1, m_min: int = 0):
    for n in range(n_min, n_max + 1):
        for m in range(m_min, m_max + 1):
            yield from enumerate_multigraphs(n, m, constraints)


CONNECTED = Constraints(connected=True)
BRIDGELESS = Constraints(connected=True, every_edge_on_cycle=True)


def _rng(lemma_id: str, seed: int) -> random.Random:
    return random.Random(f"{lemma_id}:{seed}")


def _random_graph(rng: random.Random, n: int, m: int, bridgeless: bool, max_parallel: int = 4) -> Multigraph:
    """Random connected graph; with ``bridgeless`` every edge lies on a cycle."""
    if m < (max(n, 1) if bridgeless else n - 1) or (bridgeless and n == 2 and m < 2):
        raise ValueError(f"no connected graph with {n} vertices and {m} edges of this kind")
    while True:
        order = list(range(n))
        rng.shuffle(order)
        edges: list[tuple[int, int]] = []
        if bridgeless and n == 1:
            edges.append((0, 0))
        elif bridgeless and n == 2:
            edges += [(order[0], order[1])] * 2
        elif bridgeless:
            edges += [(order[i], order[(i + 1) % n]) for i in range(n)]
        else:
            edges += [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
        while len(edges) < m:
            u, v = rng.randrange(n), rng.randrange(n)
            if u == v and rng.random() < 0.7:
                continue
            edges.append((u, v))
        if len(edges) != m:
            continue
        g = Multigraph(n, edges)
        if max(_multiplicities(g), default=0) <= max_parallel:
            return canonical_graph(g)


def _multiplicities(g: Multigraph) -> list[int]:
    count: dict[tuple[int, int], int] = {}
    for u, v in g.edges:
        if u != v:
            count[(u, v)] = count.get((u, v), 0) + 1
    return list(count.values())


def _random_graphs(lemma_id, seed, count, sizes, bridgeless, keep: Callable[[Multigraph], bool] = lambda g: True):
    """Up to ``count`` distinct random graphs, sizes drawn from ``sizes``; tries are bounded."""
    rng = _rng(lemma_id, seed)
    seen = set()
    out = []
    for _ in range(count * 50):
        if len(out) >= count:
            break
        n, m = rng.choice(sizes)
        g = _random_graph(rng, n, m, bridgeless)
        key = canonical_form(g)
        if key in seen or not keep(g):
            continue
        seen.add(key)
        out.append(g)
    return out


def _dedupe_matroids(ms: list[Matroid]) -> list[Matroid]:
    buckets: dict[tuple, list[Matroid]] = {}
    out = []
    for m in ms:
        key = (m.n, m.rank, tuple(sorted(map(popcount, m.circuits))))
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(prev, m) is not None for prev in bucket):
            continue
        bucket.append(m)
        out.append(m)
    return out


def _cap(items: list, budget: LemmaBudget, lemma_id: str) -> list:
    if len(items) > budget.max_instances:
        raise ResourceError(
            f"{lemma_id}: family has {len(items)} instances, budget allows {budget.max_instances}",
            {"instances": len(items), "max_instances": budget.max_instances},
        )
    return items


def _with_line_cap(m: Matroid, caps: Caps) -> Caps:
    """Raise ``max_parallel`` to the longest line of ``m`` so the search stays exhaustive."""
    line = max_line_size(m)
    return replace(caps, max_parallel=max(caps.max_parallel, line))


def _lift_corank(g: Multigraph) -> int:
    lm = lift_matroid(g)
    return lm.corank


# --------------------------------------------------------------------- rows


def _series_pair_holds(g: Multigraph) -> bool:
    lm = lift_matroid(g)
    return set(element_classes(lm).series) == set(series_classes(g))


def _fam_series_pair(budget, seed):
    graphs = [g for g in _graphs(5, 8, CONNECTED) if _lift_corank(g) >= 2]
    extra = _random_graphs(
        "series_pair", seed, budget.random_instances, [(6, 9), (6, 10), (7, 10), (7, 11)], False,
        keep=lambda g: _lift_corank(g) >= 2,
    )
    params = {"exhaustive": "connected, n<=5, m<=8, corank(L)>=2", "random": "connected n in 6..7, m in 9..11"}
    return params, [{"graph": graph_to_obj(g)} for g in graphs + extra]


def _chk_series_pair(inst, budget):
    g = graph_from_obj(inst["graph"])
    if _series_pair_holds(g):
        return None
    lm = lift_matroid(g)
    return {
        "matroid_series": [list(bits(s)) for s in element_classes(lm).series],
        "graph_series": [list(bits(s)) for s in series_classes(g)],
    }


def _fam_caveat(budget, seed):
    g = Multigraph(3, [(0, 1), (0, 1), (0, 2), (1, 2)])
    return {"instance": "theta with one edge subdivided (one lift circuit)"}, [{"graph": graph_to_obj(g)}]


def _fam_graphic_is_k2n(budget, seed):
    graphs = list(_graphs(8, 8, BRIDGELESS, m_min=1))
    extra = _random_graphs(
        "graphic_is_K2n", seed, budget.random_instances, [(4, 9), (5, 9), (5, 10), (6, 10)], True
    )
    params = {"exhaustive": "2-edge-connected, m<=8", "random": "2-edge-connected n in 4..6, m in 9..10"}
    return params, [{"graph": graph_to_obj(g)} for g in graphs + extra]


def _chk_graphic_is_k2n(inst, budget):
    from .multigraph import cycle_matroid

    h = graph_from_obj(inst["graph"])
    verdict = biclift_witness(cycle_matroid(h), budget.caps)
    profile = subdivision_profile(h)
    if verdict.member == (profile.kind == "K2n"):
        return None
    return {"biclift": verdict.member, "profile": profile.kind}


def _fam_k4(budget, seed):
    level = {canonical_form(complete_graph(4)): complete_graph(4)}
    found = dict(level)
    for _ in range(3):
        nxt = {}
        for g in level.values():
            for e in range(g.m):
                h = canonical_graph(subdivide(g, e))
                nxt.setdefault(canonical_form(h), h)
        level = nxt
        found.update(nxt)
    graphs = [found[k] for k in sorted(found, key=lambda k: (len(k[1]), k))]
    return {"exhaustive": "K4 and all its subdivisions with m<=9", "random": "none"}, [
        {"graph": graph_to_obj(g)} for g in graphs
    ]


def _chk_k4(inst, budget):
    from .multigraph import cycle_matroid

    h = graph_from_obj(inst["graph"])
    verdict = biclift_witness(cycle_matroid(h), budget.caps, reduce=False)
    if not verdict.member:
        return None
    return {"witness": graph_to_obj(verdict.witness.graph)}


TWO_SUM_PARTS = (
    "uniform(1,3)", "uniform(1,4)", "uniform(2,3)", "uniform(2,4)", "uniform(2,5)",
    "uniform(3,4)", "uniform(3,5)", "MK4", "whirl(3)",
)


def _orbits(m: Matroid) -> list[int]:
    """Smallest element of each automorphism orbit."""
    parent = list(range(m.n))
    for auto in iter_isomorphisms(m, m):
        for x, y in enumerate(auto):
            a, b = x, y
            while parent[a] != a:
                a = parent[a]
            while parent[b] != b:
                b = parent[b]
            if a != b:
                parent[max(a, b)] = min(a, b)
    reps = set()
    for x in range(m.n):
        while parent[x] != x:
            x = parent[x]
        reps.add(x)
    return sorted(reps)


def _fam_two_sum(budget, seed):
    parts = [(name, catalog_get(name)) for name in TWO_SUM_PARTS]
    out = []
    for i, (n1, m1) in enumerate(parts):
        for n2, m2 in parts[i:]:
            if m1.n + m2.n - 2 > 10:
                continue
            for e1 in _orbits(m1):
                for e2 in _orbits(m2):
                    nsum = two_sum(m1, m2, e1, e2)
                    if biclift_witness(nsum, _with_line_cap(nsum, budget.caps)).member:
                        out.append({
                            "left": matroid_to_obj(m1), "right": matroid_to_obj(m2),
                            "e1": e1, "e2": e2, "names": [n1, n2],
                        })
    params = {"parts": list(TWO_SUM_PARTS), "size": "<=10", "basepoints": "one per automorphism orbit",
              "kept": "2-sums that are bicircular lifts"}
    return params, out


def _side_graph(g: Multigraph, iso, side_elems, vertex: int) -> Multigraph:
    """Edges ``iso[j]`` for ``j`` in ``side_elems`` (None marks the basepoint loop)."""
    edges = [(vertex, vertex) if j is None else g.edges[iso[j]] for j in side_elems]
    return Multigraph(g.n, edges)


def _chk_two_sum(inst, budget):
    m1, m2 = matroid_from_obj(inst["left"]), matroid_from_obj(inst["right"])
    e1, e2 = inst["e1"], inst["e2"]
    nsum = two_sum(m1, m2, e1, e2)
    split = m1.n - 1
    side1 = full_mask(split)
    side2 = nsum.ground & ~side1
    elems1 = [None if x == e1 else (x if x < e1 else x - 1) for x in range(m1.n)]
    elems2 = [None if x == e2 else split + (x if x < e2 else x - 1) for x in range(m2.n)]
    for g, _ in search_lift(nsum, _with_line_cap(nsum, budget.caps), first_only=False):
        lm = lift_matroid(g)
        for iso in iter_isomorphisms(nsum, lm):
            a = to_mask(iso[x] for x in bits(side1))
            b = to_mask(iso[x] for x in bits(side2))
            shared = g.vertices_of(a) & g.vertices_of(b)
            if len(shared) != 1:
                continue
            (v,) = shared
            g1 = _side_graph(g, iso, elems1, v)
            g2 = _side_graph(g, iso, elems2, v)
            if set(lift_matroid(g1).circuits) == set(m1.circuits) and set(lift_matroid(g2).circuits) == set(
                m2.circuits
            ):
                return None
    return {"reason": "no representation splits the two sides at one vertex with matching parts"}


def _u24_family(lemma_id, budget, seed, m_max: int, random_sizes):
    """Connected matroids on at most ``m_max`` elements with a U(2,4) minor."""
    cands: list[Matroid] = []
    for g in _graphs(m_max, m_max, BRIDGELESS, m_min=1):
        if _lift_corank(g) < 2:
            continue
        lm = lift_matroid(g)
        cands += [lm, dual(lm)]
    for name in ("uniform(2,4)", "uniform(2,5)", "uniform(3,5)", "uniform(2,6)", "uniform(3,6)",
                 "uniform(4,6)", "uniform(3,7)", "whirl(3)", "F7", "F7dual", "MK4"):
        m = catalog_get(name)
        if m.n <= m_max:
            cands.append(m)
    for g in _random_graphs(lemma_id, seed, budget.random_instances, random_sizes, True,
                            keep=lambda g: _lift_corank(g) >= 2):
        cands.append(lift_matroid(g))
    cands = [m for m in cands if matroid_connected(m) and has_minor_isomorphic(m, U24) is not None]
    return _dedupe_matroids(cands)


def _fam_con_minor(budget, seed):
    ms = _u24_family("con_minor", budget, seed, 7, [(4, 8), (5, 8)])
    params = {"exhaustive": "connected L(g), L(g)* for 2-edge-connected g with m<=7, plus catalog; "
              "those with a U(2,4) minor, up to isomorphism", "random": "L(g), 2-edge-connected, m=8"}
    return params, [{"matroid": matroid_to_obj(m)} for m in ms]


def _connected_with_u24(m: Matroid) -> bool:
    return matroid_connected(m) and has_minor_isomorphic(m, U24) is not None


def _chk_con_minor(inst, budget):
    m = matroid_from_obj(inst["matroid"])
    w = has_minor_isomorphic(m, U24)
    if w is None:
        return {"reason": "no U(2,4) minor"}
    for f in bits(w.delete | w.contract):
        if _connected_with_u24(matroid_minor(m, delete=1 << f).matroid):
            continue
        if _connected_with_u24(matroid_minor(m, contract=1 << f).matroid):
            continue
        return {"element": f}
    return None


def _fam_bixby(budget, seed):
    ms = _u24_family("bixby_u24", budget, seed, 7, [(4, 8), (5, 8)])
    params = {"exhaustive": "same family as con_minor", "random": "L(g), 2-edge-connected, m=8"}
    return params, [{"matroid": matroid_to_obj(m)} for m in ms]


def _chk_bixby(inst, budget):
    m = matroid_from_obj(inst["matroid"])
    bad = [e for e in range(m.n) if has_minor_isomorphic(m, U24, keep=e) is None]
    return {"elements": bad} if bad else None


def _fam_loop_loop(budget, seed):
    out = []
    graphs = [g for g in _graphs(4, 6, BRIDGELESS, m_min=1) if g.loops]
    graphs += _random_graphs("loop_loop", seed, budget.random_instances, [(5, 7), (5, 8)], True,
                             keep=lambda g: bool(g.loops))
    for g in graphs:
        for e in bits(g.loops):
            out.append({"graph": graph_to_obj(g), "loop": e})
    params = {"exhaustive": "2-edge-connected g with a loop, n<=4, m<=6; each loop e",
              "random": "2-edge-connected with a loop, n=5, m in 7..8",
              "representations": "every connected G2 and every labeling with L(G2)=L(G1) and e a loop"}
    return params, out


def _chk_loop_loop(inst, budget):
    g1 = graph_from_obj(inst["graph"])
    e = inst["loop"]
    n = lift_matroid(g1)
    target = enumerate_cycles(g1)
    for h, _ in search_lift(n, _with_line_cap(n, budget.caps), first_only=False):
        lh = lift_matroid(h)
        for iso in iter_isomorphisms(n, lh):
            if not h.is_loop(iso[e]):
                continue
            h2 = Multigraph(h.n, [h.edges[iso[i]] for i in range(n.n)])
            if enumerate_cycles(h2) != target:
                return {"other": graph_to_obj(h2)}
    return None


def _is_three_connected(m: Matroid) -> bool:
    return connectivity_order(m).kind == "three_connected"


def _fam_ele_del(budget, seed):
    cands: list[Matroid] = []
    for g in _graphs(5, 9, BRIDGELESS, m_min=1):
        if _lift_corank(g) < 2:
            continue
        lm = lift_matroid(g)
        cands += [lm, dual(lm)]
    for name in ("whirl(3)", "whirl(4)", "uniform(2,5)", "uniform(2,6)", "uniform(3,6)", "uniform(3,7)",
                 "uniform(4,7)", "uniform(2,7)"):
        cands.append(catalog_get(name))
    extra = _random_graphs("ele_del", seed, budget.random_instances, [(5, 10), (6, 10)], True,
                           keep=lambda g: _lift_corank(g) >= 3)
    cands += [lift_matroid(g) for g in extra]
    cands = [m for m in cands if m.corank >= 3 and _is_three_connected(m)]
    cands = [m for m in cands if has_minor_isomorphic(m, U24) is not None]
    ms = _dedupe_matroids(cands)
    params = {"exhaustive": "L(g) and L(g)* for 2-edge-connected g with n<=5, m<=9, plus whirls and "
              "uniform matroids; 3-connected, corank>=3, with a U(2,4) minor, up to isomorphism",
              "random": "L(g), 2-edge-connected, n in 5..6, m=10"}
    return params, [{"matroid": matroid_to_obj(m)} for m in ms]


def _chk_ele_del(inst, budget):
    m = matroid_from_obj(inst["matroid"])
    for e in range(m.n):
        co = cosimplify_matroid(matroid_minor(m, delete=1 << e).matroid).matroid
        if _is_three_connected(co) and has_minor_isomorphic(co, U24) is not None:
            return None
    return {"reason": "no element deletion keeps co(N\\e) 3-connected with a U(2,4) minor"}


def _co_rank(m: Matroid) -> int:
    return cosimplify_matroid(m).matroid.rank


def _fam_del_rank(budget, seed):
    graphs = [g for g in _graphs(6, 10, BRIDGELESS, m_min=1) if _lift_corank(g) >= 3]
    graphs += _random_graphs("del_rank", seed, budget.random_instances, [(7, 10), (7, 11)], True,
                             keep=lambda g: _lift_corank(g) >= 3)
    params = {"exhaustive": "2-edge-connected g with n<=6, m<=10 and corank(L(g))>=3 (so L(g) is connected)",
              "random": "2-edge-connected, n=7, m in 10..11", "elements": "every deletion"}
    return params, [{"graph": graph_to_obj(g)} for g in graphs]


def _chk_del_rank(inst, budget):
    g = graph_from_obj(inst["graph"])
    n = lift_matroid(g)
    floor = _co_rank(n) - 2
    bad = [e for e in range(n.n) if _co_rank(matroid_minor(n, delete=1 << e).matroid) < floor]
    return {"elements": bad} if bad else None


def _fam_contra(budget, seed):
    graphs = []
    pool = list(_graphs(6, 10, BRIDGELESS, m_min=1))
    pool += _random_graphs("contra_non_graphic", seed, budget.random_instances, [(6, 11), (7, 11)], True)
    for g in pool:
        n = lift_matroid(g)
        if n.corank < 4 or _co_rank(n) < 4:
            continue
        if is_graphic(n).member:
            continue
        graphs.append(g)
    params = {"exhaustive": "2-edge-connected g with n<=6, m<=10; N=L(g) non-graphic, r(co N)>=4, corank>=4",
              "random": "2-edge-connected, n in 6..7, m=11"}
    return params, [{"graph": graph_to_obj(g)} for g in graphs]


def _chk_contra(inst, budget):
    g = graph_from_obj(inst["graph"])
    n = lift_matroid(g)
    in_pair = 0
    for p in parallel_classes(g):
        in_pair |= p
    bad = []
    for e in range(g.m):
        if not g.is_loop(e):
            if is_graphic(matroid_minor(n, contract=1 << e).matroid).member:
                bad.append(["contract", e])
        if g.is_loop(e) or (in_pair >> e) & 1:
            if is_graphic(matroid_minor(n, delete=1 << e).matroid).member:
                bad.append(["delete", e])
    return {"minors": bad} if bad else None


def _fam_rep_unique(budget, seed):
    graphs = []
    for g in _graphs(6, 10, BRIDGELESS, n_min=5, m_min=1):
        if _lift_corank(g) < 2:
            continue
        if cosimplify_graph(g).graph.n < 5:
            continue
        graphs.append(g)
    params = {"exhaustive": "2-edge-connected g with n<=6, m<=10, corank(L(g))>=2, |co(g)|>=5",
              "random": "none", "classes": "unlabeled 2-isomorphism"}
    return params, [{"graph": graph_to_obj(g)} for g in graphs]


def _chk_rep_unique(inst, budget):
    g = graph_from_obj(inst["graph"])
    n = lift_matroid(g)
    reps = [h for h, _ in search_lift(n, _with_line_cap(n, budget.caps), first_only=False)]
    classes = group_by_2_isomorphism(reps)
    if len(classes) == 1:
        return None
    return {"classes": [graph_to_obj(c[0]) for c in classes]}


def _fam_parallel(budget, seed):
    out = []

    def add(g):
        for p in parallel_classes(g):
            if 2 <= popcount(p) <= 5:
                out.append({"graph": graph_to_obj(g), "class": list(bits(p))})

    for g in _graphs(4, 7, CONNECTED, m_min=2):
        add(g)
    rng = _rng("parallel_u2k", seed)
    for _ in range(budget.random_instances):
        k = rng.randrange(2, 6)
        nv = rng.randrange(2, 7)
        base = _random_graph(rng, nv, nv + rng.randrange(0, 3), rng.random() < 0.5)
        u, v = rng.sample(range(base.n), 2)
        add(canonical_graph(Multigraph(base.n, list(base.edges) + [(u, v)] * k)))
    params = {"exhaustive": "connected g with n<=4, m<=7, every parallel class of size 2..5",
              "random": "random connected base plus a planted class of size 2..5"}
    return params, out


def _chk_parallel(inst, budget):
    g = graph_from_obj(inst["graph"])
    p = to_mask(inst["class"])
    sub = restriction(lift_matroid(g), p).matroid
    if find_isomorphism(sub, uniform(2, popcount(p))) is not None:
        return None
    return {"restriction": matroid_to_obj(sub)}


@dataclass(frozen=True)
class Row:
    lemma_id: str
    family: Callable
    check: Callable
    expected_failure: bool = False


ROWS: tuple[Row, ...] = (
    Row("series_pair", _fam_series_pair, _chk_series_pair),
    Row("series_pair_caveat", _fam_caveat, _chk_series_pair, expected_failure=True),
    Row("graphic_is_K2n", _fam_graphic_is_k2n, _chk_graphic_is_k2n),
    Row("k4_not_biclift", _fam_k4, _chk_k4),
    Row("two_sum_decomposition", _fam_two_sum, _chk_two_sum),
    Row("con_minor", _fam_con_minor, _chk_con_minor),
    Row("bixby_u24", _fam_bixby, _chk_bixby),
    Row("loop_loop", _fam_loop_loop, _chk_loop_loop),
    Row("ele_del", _fam_ele_del, _chk_ele_del),
    Row("del_rank", _fam_del_rank, _chk_del_rank),
    Row("contra_non_graphic", _fam_contra, _chk_contra),
    Row("rep_uniqueness", _fam_rep_unique, _chk_rep_unique),
    Row("parallel_u2k", _fam_parallel, _chk_parallel),
)

LEMMA_IDS = tuple(r.lemma_id for r in ROWS)
_BY_ID = {r.lemma_id: r for r in ROWS}


def _row(lemma_id: str) -> Row:
    try:
        return _BY_ID[lemma_id]
    except KeyError:
        raise KeyError(f"unknown lemma id {lemma_id!r}; known: {', '.join(LEMMA_IDS)}") from None


def verify_lemma(lemma_id: str, budget: LemmaBudget = DEFAULT_BUDGET, seed: int = 0,
                 timing: bool = False) -> LemmaReport:
    """Run one row.  Deterministic in ``(lemma_id, budget, seed)``; ``elapsed_ms`` only with ``timing``."""
    row = _row(lemma_id)
    start = time.perf_counter()
    params, instances = row.family(budget, seed)
    _cap(instances, budget, lemma_id)
    params = {**params, "seed": seed, "caps": budget.caps.as_dict(),
              "random_instances": budget.random_instances, "max_instances": budget.max_instances}
    bad = []
    for inst in instances:
        detail = row.check(inst, budget)
        if detail is not None:
            bad.append({**inst, "detail": detail})
    if row.expected_failure:
        passed = bool(instances) and len(bad) == len(instances)
    else:
        passed = bool(instances) and not bad
    elapsed = int((time.perf_counter() - start) * 1000) if timing else None
    return LemmaReport(lemma_id, params, len(instances), bad, elapsed, row.expected_failure, passed)


def _run_row(args) -> LemmaReport:
    lemma_id, budget, seed, timing = args
    try:
        return verify_lemma(lemma_id, budget, seed, timing)
    except ResourceError as exc:
        return LemmaReport(lemma_id, {"seed": seed, "caps": budget.caps.as_dict()}, 0,
                           expected_failure=_row(lemma_id).expected_failure, error=f"resource: {exc}")


def run_all(budget: LemmaBudget = DEFAULT_BUDGET, seed: int = 0, jobs: int = 1, timing: bool = False,
            ids: Optional[tuple[str, ...]] = None) -> list[LemmaReport]:
    """Every row (or the listed ones), in table order whatever ``jobs`` is."""
    todo = [(i, budget, seed, timing) for i in (ids or LEMMA_IDS)]
    for i, *_ in todo:
        _row(i)
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_row, todo))
    return [_run_row(t) for t in todo]


def replay(lemma_id: str, instance: dict, budget: LemmaBudget = DEFAULT_BUDGET) -> bool:
    """True when ``instance`` violates the row's predicate (the ``detail`` key is ignored)."""
    row = _row(lemma_id)
    inst = {k: v for k, v in instance.items() if k != "detail"}
    return row.check(inst, budget) is not None
