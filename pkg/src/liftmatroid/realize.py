"""Representation searches: graphs realizing a matroid as ``M(G)`` or ``L(G)``.

Both searches are exhaustive within their stated limits and report how
far they got through :class:`~liftmatroid.errors.ResourceError` instead of
returning an unsupported "no".
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from ._bits import bits, popcount, to_mask
from .enumeration import Constraints, enumerate_multigraphs
from .errors import ResourceError
from .lift import lift_matroid
from .matroid import (
    Matroid,
    basis_of,
    components,
    element_classes,
    find_isomorphism,
    max_line_size,
    restriction,
)
from .multigraph import Multigraph, enumerate_cycles


@dataclass(frozen=True)
class Caps:
    """Limits on lift-representation searches.

    ``max_vertices`` and ``max_edges`` bound the graphs enumerated (after
    series reduction), ``max_parallel`` the multiplicity of any link.
    """

    max_vertices: int = 8
    max_edges: int = 14
    max_parallel: int = 4
    node_budget: int = 2_000_000

    def as_dict(self) -> dict:
        return {
            "max_vertices": self.max_vertices,
            "max_edges": self.max_edges,
            "max_parallel": self.max_parallel,
        }


DEFAULT_CAPS = Caps()


# ------------------------------------------------------------------ graphic


def _fundamental_paths(m: Matroid, basis: int) -> dict[int, int]:
    """Non-basis element -> basis part of its fundamental circuit."""
    out = {}
    for e in bits(m.ground & ~basis):
        t = basis | (1 << e)
        for c in m.by_element[e]:
            if c & ~t == 0:
                out[e] = c & ~(1 << e)
                break
    return out


def _realize_connected_graphic(m: Matroid, budget: int) -> Optional[tuple[Multigraph, int]]:
    """A graph on ``r + 1`` vertices with ``M(G) = m`` (identity labels), or None."""
    basis = basis_of(m, m.ground)
    r = popcount(basis)
    paths = _fundamental_paths(m, basis)
    # place basis elements so that fundamental paths complete early
    order: list[int] = []
    placed = 0
    remaining = set(bits(basis))
    while remaining:

        def score(b):
            t = placed | (1 << b)
            done = sum(1 for p in paths.values() if (p >> b) & 1 and p & ~t == 0)
            touch = sum(1 for p in paths.values() if (p >> b) & 1 and p & placed)
            return (-done, -touch, b)

        b = min(remaining, key=score)
        order.append(b)
        placed |= 1 << b
        remaining.discard(b)
    pos = {b: i for i, b in enumerate(order)}
    touching: list[list[int]] = [[] for _ in order]
    closing: list[list[int]] = [[] for _ in order]
    for e, p in paths.items():
        last = max(pos[b] for b in bits(p))
        closing[last].append(e)
        for b in bits(p):
            touching[pos[b]].append(e)

    ends = [(0, 0)] * m.n
    comp: list[int] = []  # component label per vertex
    nodes = 0
    target = frozenset(m.circuits)

    def path_ok(p: int, complete: bool) -> bool:
        deg: dict[int, int] = {}
        for b in bits(p):
            if complete or (placed_mask >> b) & 1:
                u, v = ends[b]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
        if any(d > 2 for d in deg.values()):
            return False
        if complete:
            return len(deg) == popcount(p) + 1
        return True

    placed_mask = 0

    def finish() -> Optional[Multigraph]:
        edges = list(ends)
        for e, p in paths.items():
            deg: dict[int, int] = {}
            for b in bits(p):
                u, v = ends[b]
                deg[u] = deg.get(u, 0) + 1
                deg[v] = deg.get(v, 0) + 1
            a, b2 = [w for w, d in deg.items() if d == 1]
            edges[e] = (a, b2)
        g = Multigraph(r + 1, edges)
        if enumerate_cycles(g) == target:
            return g
        return None

    def extend(i: int) -> Optional[Multigraph]:
        nonlocal nodes, placed_mask
        if i == r:
            return finish()
        b = order[i]
        nv = len(comp)
        options = []
        if nv + 2 <= r + 1:
            options.append((nv, nv + 1, 2))
        if nv + 1 <= r + 1:
            options += [(u, nv, 1) for u in range(nv)]
        options += [(u, v, 0) for u in range(nv) for v in range(u + 1, nv) if comp[u] != comp[v]]
        for u, v, fresh in options:
            nodes += 1
            if nodes > budget:
                raise ResourceError("graphic realization exceeded its node budget", {"nodes": nodes})
            saved = list(comp)
            if fresh == 2:
                comp.extend([nv, nv])
            elif fresh == 1:
                comp.append(comp[u])
            else:
                old, new = comp[v], comp[u]
                for w in range(nv):
                    if comp[w] == old:
                        comp[w] = new
            ends[b] = (u, v)
            placed_mask |= 1 << b
            ok = all(path_ok(paths[e], False) for e in touching[i]) and all(
                path_ok(paths[e], True) for e in closing[i]
            )
            if ok:
                found = extend(i + 1)
                if found is not None:
                    return found
            placed_mask &= ~(1 << b)
            comp[:] = saved
        return None

    if r == 0:
        # every element is a loop
        g = Multigraph(1, [(0, 0)] * m.n)
        return (g, 0) if enumerate_cycles(g) == target else None
    g = extend(0)
    return None if g is None else (g, nodes)


class GraphicRealization:
    """Result of :func:`realize_graphic`: ``graph`` edge ``i`` realizes element ``i``."""

    __slots__ = ("graph", "nodes")

    def __init__(self, graph: Optional[Multigraph], nodes: int):
        self.graph = graph
        self.nodes = nodes


def realize_graphic(m: Matroid, budget: int = 2_000_000) -> GraphicRealization:
    """Search, component by component, for ``G`` with ``r(m) + c(m)`` vertices and ``M(G) = m``."""
    edges: list[tuple[int, int]] = [(0, 0)] * m.n
    offset = 0
    nodes = 0
    for comp in components(m):
        sub, labels = restriction(m, comp)
        if sub.n == 1:
            piece = Multigraph(1, [(0, 0)]) if sub.circuits else Multigraph(2, [(0, 1)])
        else:
            found = _realize_connected_graphic(sub, max(1, budget - nodes))
            if found is None:
                return GraphicRealization(None, nodes)
            piece, used = found
            nodes += used
        for i, (u, v) in enumerate(piece.edges):
            edges[labels[i]] = (u + offset, v + offset)
        offset += piece.n
    return GraphicRealization(Multigraph(offset, edges), nodes)


# --------------------------------------------------------------------- lift


class LiftSearch:
    """Outcome of :func:`search_lift`.

    ``graph`` is the first representing graph found (or None), ``mapping``
    sends matroid element ``i`` to edge ``mapping[i]``; ``graphs_checked``
    counts candidate graphs examined.
    """

    __slots__ = ("graph", "mapping", "graphs_checked")

    def __init__(self, graph, mapping, graphs_checked):
        self.graph = graph
        self.mapping = mapping
        self.graphs_checked = graphs_checked


def lift_constraints(m: Matroid, caps: Caps, min_degree: int = 0) -> tuple[Constraints, bool]:
    """Enumeration filters implied by ``m``, and whether they lose nothing against ``caps``.

    A link class of multiplicity ``k`` is a ``U(2,k)`` restriction of the lift,
    and the loops of a graph are pairwise parallel in it.
    """
    line = max_line_size(m)
    cls = element_classes(m)
    largest_parallel = max((popcount(p) for p in cls.parallel), default=1)
    need_parallel = max(2, line) if line >= 3 else 2
    complete = need_parallel <= caps.max_parallel
    c = Constraints(
        max_loops=largest_parallel,
        max_parallel=min(caps.max_parallel, need_parallel),
        every_edge_on_cycle=True,
        connected=True,
        min_degree=min_degree,
    )
    return c, complete


def search_lift(m: Matroid, caps: Caps = DEFAULT_CAPS, min_degree: int = 0, first_only: bool = True):
    """Connected graphs ``G`` on ``r(m)`` vertices, every edge on a cycle, with ``L(G) ≅ m``.

    With ``first_only`` the first hit in canonical order is returned as a
    :class:`LiftSearch`; otherwise a list of ``(graph, mapping)`` pairs.
    """
    r, n = m.rank, m.n
    frontier = {"vertices": r, "edges": n, **caps.as_dict()}
    if r > caps.max_vertices or n > caps.max_edges:
        raise ResourceError(
            f"lift search needs {r} vertices and {n} edges, beyond the caps", frontier
        )
    constraints, complete = lift_constraints(m, caps, min_degree)
    key = tuple(sorted(map(popcount, m.circuits)))
    hits = []
    checked = 0
    for g, lm, lkey in _lift_table(r, n, constraints):
        checked += 1
        if checked > caps.node_budget:
            raise ResourceError("lift search exceeded its graph budget", {**frontier, "graphs": checked})
        if lkey != key:
            continue
        iso = find_isomorphism(m, lm)
        if iso is None:
            continue
        if first_only:
            return LiftSearch(g, iso, checked)
        hits.append((g, iso))
    if not complete:
        raise ResourceError(
            "lift search found nothing, but the matroid has a line longer than max_parallel allows",
            {**frontier, "graphs": checked, "line": max_line_size(m)},
        )
    if first_only:
        return LiftSearch(None, None, checked)
    return hits


@lru_cache(maxsize=128)
def _lift_table(r: int, n: int, constraints: Constraints) -> tuple:
    """Candidate graphs with their lift matroids and circuit-size signatures."""
    out = []
    for g in enumerate_multigraphs(r, n, constraints):
        lm = lift_matroid(g)
        out.append((g, lm, tuple(sorted(map(popcount, lm.circuits)))))
    return tuple(out)


def relabel_edges(g: Multigraph, mapping: tuple[int, ...]) -> Multigraph:
    """Graph whose edge ``i`` is edge ``mapping[i]`` of ``g``."""
    return Multigraph(g.n, [g.edges[mapping[i]] for i in range(len(mapping))])


def check_lift_witness(m: Matroid, g: Multigraph, mapping: tuple[int, ...]) -> bool:
    if g.m != m.n or sorted(mapping) != list(range(m.n)):
        return False
    lm = lift_matroid(g)
    image = frozenset(to_mask(mapping[e] for e in bits(c)) for c in m.circuits)
    return image == frozenset(lm.circuits)


def check_graphic_witness(m: Matroid, g: Multigraph, mapping: tuple[int, ...]) -> bool:
    if g.m != m.n or sorted(mapping) != list(range(m.n)):
        return False
    image = frozenset(to_mask(mapping[e] for e in bits(c)) for c in m.circuits)
    return image == enumerate_cycles(g)
