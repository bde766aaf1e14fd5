"""Labeled multigraphs and the graph-side constructions.

Edge ``i`` of a :class:`Multigraph` is the ``i``-th entry of ``edges``.
Edge sets are plain ``int`` bitmasks over edge labels.  Loops count as
cycles of length one and parallel pairs as cycles of length two.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from ._bits import bits, full_mask, popcount, to_mask
from .errors import CapacityError

MAX_EDGES = 32


class Multigraph:
    """Immutable multigraph on vertices ``0..n-1``.

    Endpoints of every edge are stored as ``(u, v)`` with ``u <= v``.
    """

    __slots__ = ("n", "edges", "_cycles")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            norm.append((u, v) if u <= v else (v, u))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "_cycles", None)

    def __setattr__(self, name, value):
        raise AttributeError("Multigraph is immutable")

    def __reduce__(self):
        return (Multigraph, (self.n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def all_edges(self) -> int:
        return full_mask(len(self.edges))

    @property
    def loops(self) -> int:
        return to_mask(i for i, (u, v) in enumerate(self.edges) if u == v)

    def is_loop(self, e: int) -> bool:
        u, v = self.edges[e]
        return u == v

    def degree(self, v: int) -> int:
        return sum((a == v) + (b == v) for a, b in self.edges)

    def vertices_of(self, x: int) -> set[int]:
        """Vertex set of ``G|x`` (no isolated vertices)."""
        out = set()
        for e in bits(x):
            out.update(self.edges[e])
        return out

    def star(self, v: int) -> int:
        """``st_G(v)``: edges incident with ``v``."""
        return to_mask(i for i, (a, b) in enumerate(self.edges) if v in (a, b))

    def adjacency(self) -> list[list[tuple[int, int]]]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            adj[u].append((i, v))
            if u != v:
                adj[v].append((i, u))
        return adj

    def __eq__(self, other):
        return isinstance(other, Multigraph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Multigraph({self.n}, {list(self.edges)!r})"


class Relabeled(NamedTuple):
    """A derived graph plus ``labels[i]`` = label in the source of new edge ``i``."""

    graph: Multigraph
    labels: tuple[int, ...]


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def components_of(g: Multigraph, x: int) -> int:
    """Number of connected components of ``G|x``."""
    parent = list(range(g.n))
    used = set()
    comps = 0
    for e in bits(x):
        u, v = g.edges[e]
        for w in (u, v):
            if w not in used:
                used.add(w)
                comps += 1
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def is_connected(g: Multigraph) -> bool:
    """True when the graph, isolated vertices included, has one component."""
    if g.n <= 1:
        return True
    parent = list(range(g.n))
    comps = g.n
    for u, v in g.edges:
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps == 1


def cyclomatic(g: Multigraph, x: int) -> int:
    """``|X| - |V(G|X)| + c(G|X)``; zero for the empty set."""
    if not x:
        return 0
    return popcount(x) - len(g.vertices_of(x)) + components_of(g, x)


def enumerate_cycles(g: Multigraph) -> frozenset[int]:
    """All edge sets ``X`` with ``G|X`` connected and 2-regular."""
    if g._cycles is not None:
        return g._cycles
    cycles = set()
    adj = g.adjacency()
    for e, (u, v) in enumerate(g.edges):
        if u == v:
            cycles.add(1 << e)

    def extend(s: int, v: int, first: int, path: int, visited: int) -> None:
        for f, w in adj[v]:
            if w == v:
                continue
            if w == s:
                # each cycle is met twice; keep the traversal whose first edge is smaller
                if f > first:
                    cycles.add(path | (1 << f))
            elif w > s and not (visited >> w) & 1:
                extend(s, w, first, path | (1 << f), visited | (1 << w))

    for s in range(g.n):
        for f, w in adj[s]:
            if w > s:
                extend(s, w, f, 1 << f, (1 << s) | (1 << w))
    result = frozenset(cycles)
    object.__setattr__(g, "_cycles", result)
    return result


def cut_edges(g: Multigraph) -> int:
    """Edges lying on no cycle (bridges)."""
    covered = 0
    for c in enumerate_cycles(g):
        covered |= c
    return g.all_edges & ~covered


def graph_minor(g: Multigraph, delete: int = 0, contract: int = 0) -> Relabeled:
    """Delete then contract; surviving edges are relabeled densely in order.

    Contracting a loop deletes it.  Vertices merged by contraction are
    renumbered by their smallest original member.
    """
    if delete & contract:
        raise ValueError("delete and contract sets overlap")
    parent = list(range(g.n))
    for e in bits(contract):
        u, v = g.edges[e]
        ru, rv = _find(parent, u), _find(parent, v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    roots = sorted({_find(parent, v) for v in range(g.n)})
    index = {r: i for i, r in enumerate(roots)}
    gone = delete | contract
    labels = tuple(i for i in range(g.m) if not (gone >> i) & 1)
    edges = [(index[_find(parent, g.edges[i][0])], index[_find(parent, g.edges[i][1])]) for i in labels]
    return Relabeled(Multigraph(len(roots), edges), labels)


def parallel_classes(g: Multigraph) -> tuple[int, ...]:
    """Non-trivial parallel classes (loops excluded), sorted by smallest label."""
    groups: dict[tuple[int, int], int] = {}
    for i, (u, v) in enumerate(g.edges):
        if u != v:
            groups[(u, v)] = groups.get((u, v), 0) | (1 << i)
    return tuple(sorted((c for c in groups.values() if popcount(c) > 1), key=lambda c: c & -c))


def series_classes(g: Multigraph) -> tuple[int, ...]:
    """Non-trivial series classes: edges on exactly the same (nonempty) set of cycles."""
    signature: dict[int, int] = {}
    for k, c in enumerate(sorted(enumerate_cycles(g))):
        for e in bits(c):
            signature[e] = signature.get(e, 0) | (1 << k)
    groups: dict[int, int] = {}
    for e, sig in signature.items():
        groups[sig] = groups.get(sig, 0) | (1 << e)
    return tuple(sorted((c for c in groups.values() if popcount(c) > 1), key=lambda c: c & -c))


class EdgeClasses(NamedTuple):
    parallel: tuple[int, ...]
    series: tuple[int, ...]
    loops: int


def edge_classes(g: Multigraph) -> EdgeClasses:
    return EdgeClasses(parallel_classes(g), series_classes(g), g.loops)


def simplify_graph(g: Multigraph) -> Relabeled:
    """``si(G)``: drop loops and all but the smallest label of each parallel class."""
    drop = g.loops
    for c in parallel_classes(g):
        drop |= c & ~(c & -c)
    return graph_minor(g, delete=drop)


def cosimplify_graph(g: Multigraph) -> Relabeled:
    """``co(G)``: contract cut-edges, then all but the smallest label of each series class."""
    labels = tuple(range(g.m))
    while True:
        contract = cut_edges(g)
        if not contract:
            for c in series_classes(g):
                contract |= c & ~(c & -c)
        if not contract:
            return Relabeled(g, labels)
        g, sub = graph_minor(g, contract=contract)
        labels = tuple(labels[i] for i in sub)


def whitney_switch(g: Multigraph, part1: int, u1: int, u2: int) -> Multigraph:
    """Twist ``G|part1`` against the rest on the vertex pair ``{u1, u2}``.

    Edge labels are unchanged; the labeled cycle family is preserved.
    """
    part1 &= g.all_edges
    part2 = g.all_edges & ~part1
    if not part1 or not part2:
        raise ValueError("both sides of the partition must be nonempty")
    shared = g.vertices_of(part1) & g.vertices_of(part2)
    if u1 == u2 or shared != {u1, u2}:
        raise ValueError(f"sides share vertices {sorted(shared)}, expected exactly {{{u1}, {u2}}}")
    swap = {u1: u2, u2: u1}
    edges = [
        (swap.get(u, u), swap.get(v, v)) if (part2 >> i) & 1 else (u, v)
        for i, (u, v) in enumerate(g.edges)
    ]
    return Multigraph(g.n, edges)


def one_sum(g1: Multigraph, g2: Multigraph, e1: int, e2: int) -> tuple[Multigraph, tuple[tuple[int, int], ...]]:
    """Glue at the vertices of marker loops ``e1``, ``e2`` and drop both loops.

    Returns the graph and ``labels[i] = (side, old_label)`` with side 1 or 2;
    surviving edges of ``g1`` come first in order, then those of ``g2``.
    """
    if not g1.is_loop(e1) or not g2.is_loop(e2):
        raise ValueError("1-sum markers must be loops of their graphs")
    a = g1.edges[e1][0]
    b = g2.edges[e2][0]
    vmap = {}
    nxt = g1.n
    for v in range(g2.n):
        if v == b:
            vmap[v] = a
        else:
            vmap[v] = nxt
            nxt += 1
    edges, labels = [], []
    for i, uv in enumerate(g1.edges):
        if i != e1:
            edges.append(uv)
            labels.append((1, i))
    for i, (u, v) in enumerate(g2.edges):
        if i != e2:
            edges.append((vmap[u], vmap[v]))
            labels.append((2, i))
    return Multigraph(nxt, edges), tuple(labels)


def disjoint_union(g1: Multigraph, g2: Multigraph) -> Multigraph:
    return Multigraph(g1.n + g2.n, list(g1.edges) + [(u + g1.n, v + g1.n) for u, v in g2.edges])


def subdivide(g: Multigraph, e: int) -> Multigraph:
    """Replace edge ``e`` by a 2-edge path; the new edge gets label ``m``."""
    u, v = g.edges[e]
    w = g.n
    edges = list(g.edges)
    edges[e] = (u, w)
    edges.append((w, v))
    return Multigraph(g.n + 1, edges)


class SubdivisionProfile(NamedTuple):
    kind: str  # "K2n", "K4", or "neither"
    n: int = 0


def _is_k2n_subdivision(g: Multigraph) -> int:
    if not g.edges or g.loops:
        return 0
    used = g.vertices_of(g.all_edges)
    if components_of(g, g.all_edges) != 1:
        return 0
    deg = {v: g.degree(v) for v in used}
    if any(d < 2 for d in deg.values()):
        return 0
    branch = [v for v, d in deg.items() if d != 2]
    if not branch:
        return 2 if len(used) >= 2 else 0
    if len(branch) != 2 or deg[branch[0]] != deg[branch[1]]:
        return 0
    a, b = branch
    adj = g.adjacency()
    for f, w in adj[a]:
        cur, edge = w, f
        while cur not in (a, b):
            (nf, nw), = [(h, x) for h, x in adj[cur] if h != edge]
            cur, edge = nw, nf
        if cur != b:
            return 0
    return deg[a]


def _has_k4_minor(g: Multigraph) -> bool:
    # series-parallel reduction; anything left over has minimum degree >= 3
    nbr: dict[int, dict[int, int]] = {}
    for u, v in g.edges:
        if u != v:
            nbr.setdefault(u, {})[v] = 1
            nbr.setdefault(v, {})[u] = 1
    changed = True
    while changed:
        changed = False
        for v in list(nbr):
            if v not in nbr:
                continue
            d = len(nbr[v])
            if d <= 1:
                for w in nbr[v]:
                    del nbr[w][v]
                del nbr[v]
                changed = True
            elif d == 2:
                x, y = nbr[v]
                del nbr[x][v], nbr[y][v], nbr[v]
                nbr[x][y] = 1
                nbr[y][x] = 1
                changed = True
    return bool(nbr)


def subdivision_profile(g: Multigraph) -> SubdivisionProfile:
    k = _is_k2n_subdivision(g)
    if k:
        return SubdivisionProfile("K2n", k)
    if _has_k4_minor(g):
        return SubdivisionProfile("K4")
    return SubdivisionProfile("neither")


def cycle_matroid(g: Multigraph):
    """``M(G)``: the matroid whose circuits are the cycles of ``g``."""
    from .matroid import Matroid

    if g.m > MAX_EDGES:
        raise CapacityError(f"{g.m} edges exceeds the {MAX_EDGES}-element cap")
    return Matroid(g.m, enumerate_cycles(g))


def are_2_isomorphic(g1: Multigraph, g2: Multigraph, labeled: bool = True) -> bool:
    """Labeled: identical labeled cycle families.  Unlabeled: ``M(g1) ≅ M(g2)``."""
    if labeled:
        return g1.m == g2.m and enumerate_cycles(g1) == enumerate_cycles(g2)
    from .matroid import find_isomorphism

    return find_isomorphism(cycle_matroid(g1), cycle_matroid(g2)) is not None
