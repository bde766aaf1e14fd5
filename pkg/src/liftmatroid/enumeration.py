"""Canonical forms and isomorph-free generation of small multigraphs.

The canonical form of a graph is the lexicographically smallest sorted
edge list over all vertex labelings reachable by individualization and
degree refinement.  Since refinement only ever orders vertices by
isomorphism invariants, that set of labelings is itself invariant, so
isomorphic graphs get the same form.

Generation is by growth plus canonical deduplication:

* connected graphs grow one edge at a time (a chord, loop, or pendant
  edge to a new vertex);
* graphs with every edge on a cycle grow one ear at a time (an open or
  closed path attached at existing vertices);
* arbitrary graphs are multisets of connected components.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

from .errors import CapacityError
from .multigraph import MAX_EDGES, Multigraph

MAX_VERTICES = 12

Edges = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class Constraints:
    """Filters for :func:`enumerate_multigraphs`.

    ``max_loops`` bounds the total number of loops, ``max_parallel`` the
    multiplicity of any link.  ``connected`` requires a connected graph
    with no isolated vertex (a single vertex counts as connected).
    """

    max_loops: Optional[int] = None
    max_parallel: Optional[int] = None
    every_edge_on_cycle: bool = False
    connected: bool = False
    min_degree: int = 0


NO_CONSTRAINTS = Constraints()


# ------------------------------------------------------------ canonical form


def _neighbours(n: int, edges: Edges) -> tuple[list[dict[int, int]], list[int], list[int]]:
    nb: list[dict[int, int]] = [dict() for _ in range(n)]
    loops = [0] * n
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if u == v:
            loops[u] += 1
        else:
            nb[u][v] = nb[u].get(v, 0) + 1
            nb[v][u] = nb[v].get(u, 0) + 1
    return nb, loops, deg


def _refine(cells: list[tuple[int, ...]], nb: list[dict[int, int]], n: int) -> list[tuple[int, ...]]:
    while True:
        where = [0] * n
        for i, c in enumerate(cells):
            for v in c:
                where[v] = i
        out = []
        split = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {}
            for v in c:
                cnt: dict[int, int] = {}
                for w, k in nb[v].items():
                    cnt[where[w]] = cnt.get(where[w], 0) + k
                sig[v] = tuple(sorted(cnt.items()))
            groups = sorted(set(sig.values()))
            if len(groups) == 1:
                out.append(c)
                continue
            split = True
            for s in groups:
                out.append(tuple(v for v in c if sig[v] == s))
        cells = out
        if not split:
            return cells


def _orbit_roots(cell: tuple[int, ...], autos: list[tuple[int, ...]], path: tuple[int, ...]) -> dict[int, int]:
    """Orbits on ``cell`` of the group generated by the known automorphisms fixing ``path``."""
    parent = {v: v for v in cell}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in autos:
        if any(g[v] != v for v in path):
            continue
        for v in cell:
            a, b = find(v), find(g[v])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return {v: find(v) for v in cell}


def canonical_order(n: int, edges: Edges) -> tuple[int, ...]:
    """``order[i]`` = the vertex that receives canonical label ``i``.

    The search tree is pruned with automorphisms found on the way: a leaf
    whose form equals the best one yields an automorphism that maps an
    already finished subtree onto the current one, so the search returns
    to their common ancestor; and later children in the same orbit as a
    finished child are skipped.  Neither prunes the first leaf with the
    minimum form, so the result is the same as the unpruned search.
    """
    nb, loops, deg = _neighbours(n, edges)
    active = [v for v in range(n) if deg[v]]
    isolated = tuple(v for v in range(n) if not deg[v])
    keys = sorted({(-deg[v], -loops[v]) for v in active})
    cells = [tuple(v for v in active if (-deg[v], -loops[v]) == k) for k in keys]
    best: list = [None, None, ()]  # form, order, path
    autos: list[tuple[int, ...]] = []

    def leaf(order, path) -> Optional[int]:
        pos = [0] * n
        for i, v in enumerate(order):
            pos[v] = i
        form = tuple(sorted((pos[u], pos[v]) if pos[u] <= pos[v] else (pos[v], pos[u]) for u, v in edges))
        if best[0] is None or form < best[0]:
            best[0], best[1], best[2] = form, order, path
            return None
        if form == best[0]:
            g = list(range(n))
            for a, b in zip(best[1], order):
                g[a] = b
            autos.append(tuple(g))
            d = 0
            while d < min(len(path), len(best[2])) and path[d] == best[2][d]:
                d += 1
            return d
        return None

    def search(cells, path) -> Optional[int]:
        cells = _refine(cells, nb, n)
        for i, c in enumerate(cells):
            if len(c) > 1:
                break
        else:
            return leaf(tuple(c[0] for c in cells) + isolated, path)
        depth = len(path)
        done: list[int] = []
        for v in c:
            if done and autos:
                roots = _orbit_roots(c, autos, path)
                if any(roots[w] == roots[v] for w in done):
                    continue
            rest = tuple(w for w in c if w != v)
            r = search(cells[:i] + [(v,), rest] + cells[i + 1 :], path + (v,))
            done.append(v)
            if r is not None and r < depth:
                return r
        return None

    search(cells, ())
    if best[1] is None:
        return isolated
    return best[1]


def canonical_form(g: Multigraph) -> tuple[int, Edges]:
    order = canonical_order(g.n, g.edges)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.n, tuple(sorted(_relabel_edge(pos, e) for e in g.edges))


def _relabel_edge(pos, e):
    a, b = pos[e[0]], pos[e[1]]
    return (a, b) if a <= b else (b, a)


class Canonical(NamedTuple):
    graph: Multigraph
    edge_map: tuple[int, ...]  # edge_map[old label] = canonical label
    vertex_map: tuple[int, ...]  # vertex_map[old vertex] = canonical vertex


def canonicalize(g: Multigraph) -> Canonical:
    order = canonical_order(g.n, g.edges)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    new_edges = [_relabel_edge(pos, e) for e in g.edges]
    ranked = sorted(range(g.m), key=lambda i: (new_edges[i], i))
    edge_map = [0] * g.m
    for new, old in enumerate(ranked):
        edge_map[old] = new
    return Canonical(Multigraph(g.n, sorted(new_edges)), tuple(edge_map), tuple(pos))


def canonical_graph(g: Multigraph) -> Multigraph:
    n, edges = canonical_form(g)
    return Multigraph(n, edges)


def graphs_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    return canonical_form(g1) == canonical_form(g2)


# ---------------------------------------------------------------- generators


def _multiplicity_ok(edges: Edges, c: Constraints) -> bool:
    if c.max_loops is None and c.max_parallel is None:
        return True
    loops = 0
    mult: dict[tuple[int, int], int] = {}
    for u, v in edges:
        if u == v:
            loops += 1
        else:
            mult[(u, v)] = mult.get((u, v), 0) + 1
    if c.max_loops is not None and loops > c.max_loops:
        return False
    if c.max_parallel is not None and mult and max(mult.values()) > c.max_parallel:
        return False
    return True


def _canon(n: int, edges: list[tuple[int, int]]) -> Edges:
    order = canonical_order(n, tuple(edges))
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    return tuple(sorted(_relabel_edge(pos, e) for e in edges))


def _degree_deficit(n: int, edges: Edges, need: int) -> int:
    if need <= 0:
        return 0
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sum(max(0, need - d) for d in deg)


def _grow_connected(n_max: int, m_max: int, c: Constraints, exact: Optional[tuple[int, int]]):
    """Connected graphs by (vertices, edges); exact=(n, m) prunes toward one target."""
    levels: list[set[tuple[int, Edges]]] = [set() for _ in range(m_max + 1)]
    levels[0].add((1, ()))
    for k in range(m_max):
        for j, edges in sorted(levels[k]):
            options = [(j, (u, v)) for u in range(j) for v in range(u, j)]
            if j < n_max:
                options += [(j + 1, (u, j)) for u in range(j)]
            for nj, e in options:
                if exact is not None:
                    n, m = exact
                    if n - nj > m - (k + 1):
                        continue
                new = edges + (e,)
                if not _multiplicity_ok(new, c):
                    continue
                levels[k + 1].add((nj, _canon(nj, list(new))))
    return levels


def _grow_bridgeless(n_max: int, m_max: int, c: Constraints, exact: Optional[tuple[int, int]]):
    """Connected graphs with every edge on a cycle, grown by ears."""
    levels: list[set[tuple[int, Edges]]] = [set() for _ in range(m_max + 1)]

    def feasible(j, k):
        if exact is None:
            return True
        n, m = exact
        gap = n - j
        spare = m - k
        if gap == 0:
            return True
        return spare >= gap + 1

    for length in range(1, min(n_max, m_max) + 1):
        if length == 1:
            cyc: Edges = ((0, 0),)
        else:
            cyc = tuple(sorted((i, (i + 1) % length) if i + 1 < length else (0, i) for i in range(length)))
        if feasible(length, length) and _multiplicity_ok(cyc, c):
            levels[length].add((length, _canon(length, list(cyc))))
    for k in range(1, m_max):
        for j, edges in sorted(levels[k]):
            if exact is not None and c.min_degree:
                if _degree_deficit(j, edges, c.min_degree) > 2 * (exact[1] - k):
                    continue
            for u in range(j):
                for v in range(u, j):
                    for t in range(0, n_max - j + 1):
                        nk = k + t + 1
                        if nk > m_max:
                            break
                        nj = j + t
                        if not feasible(nj, nk):
                            continue
                        path = [u] + list(range(j, j + t)) + [v]
                        new = edges + tuple(
                            (a, b) if a <= b else (b, a) for a, b in zip(path, path[1:])
                        )
                        if not _multiplicity_ok(new, c):
                            continue
                        levels[nk].add((nj, _canon(nj, list(new))))
    return levels


@lru_cache(maxsize=64)
def _component_table(n_max: int, m_max: int, c: Constraints) -> dict[tuple[int, int], tuple[Edges, ...]]:
    per = Constraints(max_loops=c.max_loops, max_parallel=c.max_parallel)
    grow = _grow_bridgeless if c.every_edge_on_cycle else _grow_connected
    levels = grow(n_max, m_max, per, None)
    table: dict[tuple[int, int], list[Edges]] = {}
    for k, level in enumerate(levels):
        for j, edges in level:
            table.setdefault((j, k), []).append(edges)
    table.setdefault((1, 0), [()])
    return {key: tuple(sorted(v)) for key, v in table.items()}


def _check_caps(n: int, m: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityError(f"{n} vertices exceeds the enumeration cap of {MAX_VERTICES}")
    if m > MAX_EDGES:
        raise CapacityError(f"{m} edges exceeds the enumeration cap of {MAX_EDGES}")
    if n < 0 or m < 0:
        raise ValueError("vertex and edge counts must be non-negative")


def _final_ok(n: int, edges: Edges, c: Constraints) -> bool:
    if not _multiplicity_ok(edges, c):
        return False
    if c.min_degree and _degree_deficit(n, edges, c.min_degree):
        return False
    return True


def enumerate_multigraphs(
    n: int,
    m: int,
    constraints: Optional[Constraints] = None,
    shard: Optional[tuple[int, int]] = None,
) -> Iterator[Multigraph]:
    """One canonical representative per isomorphism class, in canonical order.

    Isolated vertices are allowed unless ``constraints.connected`` is set.
    ``shard=(i, k)`` keeps every ``k``-th graph starting at ``i``; the union
    over ``i`` is the full stream.
    """
    _check_caps(n, m)
    c = constraints or NO_CONSTRAINTS
    for idx, edges in enumerate(_enumerate_edges(n, m, c)):
        if shard is None or idx % shard[1] == shard[0]:
            yield Multigraph(n, edges)


@lru_cache(maxsize=256)
def _enumerate_cached(n: int, m: int, c: Constraints) -> tuple[Edges, ...]:
    return tuple(_enumerate_edges_uncached(n, m, c))


def _enumerate_edges(n: int, m: int, c: Constraints):
    return _enumerate_cached(n, m, c)


def _enumerate_edges_uncached(n: int, m: int, c: Constraints) -> list[Edges]:
    if n == 0:
        return [()] if m == 0 else []
    if c.connected:
        if n == 1 and m == 0:
            return [()] if c.min_degree <= 0 else []
        if c.every_edge_on_cycle:
            levels = _grow_bridgeless(n, m, c, (n, m))
        else:
            levels = _grow_connected(n, m, c, (n, m))
        out = [edges for j, edges in levels[m] if j == n and _final_ok(n, edges, c)]
        return sorted(out)
    table = _component_table(n, m, c)
    keys = sorted(table)
    # components listed as (key index, graph index) pairs in non-decreasing order
    flat = [(j, k, g) for (j, k) in keys for g in table[(j, k)] if j <= n and k <= m]
    results = set()

    def combine(start: int, j_left: int, k_left: int, chosen: list):
        if j_left == 0:
            if k_left == 0:
                edges: list[tuple[int, int]] = []
                offset = 0
                for cj, _, cg in chosen:
                    edges += [(u + offset, v + offset) for u, v in cg]
                    offset += cj
                if _final_ok(n, tuple(edges), c):
                    results.add(_canon(n, edges))
            return
        for idx in range(start, len(flat)):
            cj, ck, cg = flat[idx]
            if cj > j_left or ck > k_left:
                continue
            chosen.append(flat[idx])
            combine(idx, j_left - cj, k_left - ck, chosen)
            chosen.pop()

    combine(0, n, m, [])
    return sorted(results)


def count_multigraphs(n: int, m: int, constraints: Optional[Constraints] = None) -> int:
    _check_caps(n, m)
    return len(_enumerate_edges(n, m, constraints or NO_CONSTRAINTS))
