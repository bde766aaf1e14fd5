"""The bicircular lift matroid ``L(G)`` and its rank function.

A circuit of ``L(G)`` is a minimal edge set containing two cycles: a
theta, a tight handcuff, or a pair of vertex-disjoint cycles.  Each is the
union of two cycles whose union has cyclomatic number exactly two, and
every such union is minimal because removing any edge of a cycle drops
the cyclomatic number.
"""

from __future__ import annotations

from ._bits import bits, popcount
from .errors import CapacityError
from .matroid import Matroid, from_circuits
from .multigraph import MAX_EDGES, Multigraph, components_of, cyclomatic, enumerate_cycles


def _vertex_mask(g: Multigraph, x: int) -> int:
    out = 0
    for e in bits(x):
        u, v = g.edges[e]
        out |= (1 << u) | (1 << v)
    return out


def lift_circuits(g: Multigraph) -> list[int]:
    cycles = sorted(enumerate_cycles(g))
    vmasks = [_vertex_mask(g, c) for c in cycles]
    found = set()
    for i in range(len(cycles)):
        ci, vi = cycles[i], vmasks[i]
        for j in range(i + 1, len(cycles)):
            cj, vj = cycles[j], vmasks[j]
            union = ci | cj
            if union in found:
                continue
            joined = 1 if vi & vj else 2
            if popcount(union) - popcount(vi | vj) + joined == 2:
                found.add(union)
    return list(found)


def lift_matroid(g: Multigraph, validate: bool = False) -> Matroid:
    if g.m > MAX_EDGES:
        raise CapacityError(f"{g.m} edges exceeds the {MAX_EDGES}-element cap")
    circuits = lift_circuits(g)
    if validate:
        return from_circuits(g.m, circuits)
    out = Matroid(g.m, circuits)
    out._rank = lift_rank(g, g.all_edges)
    return out


def lift_rank(g: Multigraph, x: int) -> int:
    """``|V(G|x)| - c(G|x) + min(1, cyclomatic)``."""
    if not x:
        return 0
    nv = len(g.vertices_of(x))
    nc = components_of(g, x)
    return nv - nc + min(1, popcount(x) - nv + nc)


def minimal_bicyclic_circuits(g: Multigraph) -> list[int]:
    """Independent oracle: minimal subsets with cyclomatic number at least two.

    Exponential in ``m``; used only to cross-check :func:`lift_circuits`.
    """
    bicyclic = [x for x in range(1, 1 << g.m) if cyclomatic(g, x) >= 2]
    bicyclic.sort(key=popcount)
    out: list[int] = []
    for x in bicyclic:
        if not any(c & x == c for c in out):
            out.append(x)
    return out


def rank_implied_circuits(g: Multigraph) -> list[int]:
    """Independent oracle: dependent sets all of whose one-smaller subsets are
    independent, using only :func:`lift_rank`."""
    table = [lift_rank(g, x) for x in range(1 << g.m)]
    out = []
    for x in range(1, 1 << g.m):
        size = popcount(x)
        if table[x] == size - 1 and all(table[x & ~(1 << e)] == size - 1 for e in bits(x)):
            out.append(x)
    return out
