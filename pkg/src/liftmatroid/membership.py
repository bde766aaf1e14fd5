"""Class membership: graphic, bicircular lift, and their union.

Every verdict carries a :class:`Witness` when the answer is yes.  A "no"
is only ever returned once the relevant search space has been exhausted
or a structural obstruction has been found; anything else raises
:class:`~liftmatroid.errors.ResourceError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ._bits import bits
from .catalog import catalog_get
from .enumeration import canonicalize
from .errors import InconsistencyError, ResourceError
from .matroid import (
    Matroid,
    components,
    cosimplify_matroid,
    element_classes,
    has_minor_isomorphic,
    matroid_minor,
)
from .multigraph import Multigraph, are_2_isomorphic
from .realize import (
    DEFAULT_CAPS,
    Caps,
    check_graphic_witness,
    check_lift_witness,
    realize_graphic,
    search_lift,
)

GRAPHIC_EXCLUDED = ("uniform(2,4)", "F7", "F7dual", "dualK5", "dualK33")


@dataclass(frozen=True)
class Witness:
    """``map[i]`` is the edge of ``graph`` representing matroid element ``i``."""

    graph: Multigraph
    kind: str  # "graphic" or "bicircular_lift"
    map: tuple[int, ...]


@dataclass(frozen=True)
class ClassVerdict:
    member: bool
    witness: Optional[Witness]
    search_exhausted: bool
    decided_by: str
    # False only when a "member" answer came without a witness because the
    # witness search ran out of budget
    complete: bool = True
    evidence: dict = field(default_factory=dict, compare=False)


def _canonical_witness(g: Multigraph, mapping: tuple[int, ...], kind: str) -> Witness:
    canon = canonicalize(g)
    return Witness(canon.graph, kind, tuple(canon.edge_map[mapping[i]] for i in range(len(mapping))))


# ------------------------------------------------------------------ graphic


def graphic_obstruction(m: Matroid, budget: int = 5_000_000) -> Optional[tuple[str, object]]:
    """First of Tutte's excluded minors found in ``m``, with the minor witness."""
    for name in GRAPHIC_EXCLUDED:
        target = catalog_get(name)
        if target.n > m.n:
            continue
        found = has_minor_isomorphic(m, target, budget=budget)
        if found is not None:
            return name, found
    return None


def is_graphic(m: Matroid, budget: int = 2_000_000) -> ClassVerdict:
    """Decide by excluded minors and, independently, by tree-based realization."""
    obstruction = graphic_obstruction(m)
    try:
        real = realize_graphic(m, budget)
    except ResourceError:
        if obstruction is not None:
            return ClassVerdict(False, None, True, "excluded_minor", evidence={"minor": obstruction[0]})
        return ClassVerdict(True, None, False, "excluded_minor", complete=False)
    if (obstruction is None) != (real.graph is not None):
        raise InconsistencyError(
            f"graphicness deciders disagree: excluded-minor says {obstruction is None}, "
            f"realization says {real.graph is not None}"
        )
    if real.graph is None:
        return ClassVerdict(
            False,
            None,
            True,
            "excluded_minor+realization",
            evidence={"minor": obstruction[0], "nodes": real.nodes},
        )
    ident = tuple(range(m.n))
    if not check_graphic_witness(m, real.graph, ident):
        raise InconsistencyError("graphic witness failed re-verification")
    return ClassVerdict(True, _canonical_witness(real.graph, ident, "graphic"), True, "excluded_minor+realization")


# --------------------------------------------------------------------- lift


def _single_circuit_graph(k: int) -> Multigraph:
    """Connected graph with ``k`` edges, ``k - 1`` vertices, whose edges form one lift circuit."""
    if k == 2:
        return Multigraph(1, [(0, 0), (0, 0)])
    # theta with paths of lengths 1, 1 and k - 2
    inner = [0] + list(range(2, k - 1)) + [1]
    edges = [(0, 1), (0, 1)] + [(a, b) for a, b in zip(inner, inner[1:])]
    return Multigraph(k - 1, edges)


def _expand_witness(
    core_graph: Multigraph, core_map: tuple[int, ...], m: Matroid, core_labels: tuple[int, ...],
    series_rep: dict[int, list[int]], coloops: int,
) -> tuple[Multigraph, tuple[int, ...]]:
    """Undo series reduction (subdivide) and coloop stripping (pendant edges).

    ``core_labels[i]`` is the element of ``m`` behind core element ``i``;
    ``series_rep[x]`` lists the elements of ``m`` collapsed onto ``x``.
    """
    n_vertices = core_graph.n
    edges: list[Optional[tuple[int, int]]] = [None] * m.n
    for i, x in enumerate(core_labels):
        u, v = core_graph.edges[core_map[i]]
        chain = series_rep.get(x, [x])
        cur = u
        for j, y in enumerate(chain):
            nxt = v if j == len(chain) - 1 else n_vertices
            if j < len(chain) - 1:
                n_vertices += 1
            edges[y] = (cur, nxt)
            cur = nxt
    anchor = 0
    for y in bits(coloops):
        if n_vertices == 0:
            n_vertices = 1
        edges[y] = (anchor, n_vertices)
        anchor = n_vertices
        n_vertices += 1
    if n_vertices == 0:
        n_vertices = 1
    g = Multigraph(n_vertices, edges)  # type: ignore[arg-type]
    return g, tuple(range(m.n))


def biclift_witness(m: Matroid, caps: Caps = DEFAULT_CAPS, reduce: bool = True) -> ClassVerdict:
    """Search for ``G`` with ``L(G) ≅ m``.

    Coloops are stripped (they are exactly the cut edges of ``G``).  When
    the rest is connected with at least two circuits, series classes are
    collapsed first, since subdividing an edge of ``G`` is exactly a series
    extension of ``L(G)``; the reduced search asks for minimum degree 3.
    """
    cls = element_classes(m)
    if cls.loops:
        return ClassVerdict(False, None, True, "has_loop")
    core, core_labels = matroid_minor(m, delete=cls.coloops)
    if not core.circuits:
        g, ident = _expand_witness(Multigraph(1), (), m, (), {}, cls.coloops)
        return _lift_verdict(m, g, ident, "free", 0)
    if core.corank == 1:
        k = core.n
        if k < 2:
            return ClassVerdict(False, None, True, "single_loop_circuit")
        g = _single_circuit_graph(k)
        return _lift_verdict_core(m, core, core_labels, g, tuple(range(k)), {}, cls.coloops, "single_circuit", 0)
    if len(components(core)) > 1:
        return ClassVerdict(False, None, True, "disconnected_core")
    series_rep: dict[int, list[int]] = {}
    target, target_labels = core, core_labels
    min_degree = 0
    if reduce:
        target, sub = cosimplify_matroid(core)
        target_labels = tuple(core_labels[i] for i in sub)
        ccls = element_classes(core)
        for s in ccls.series:
            members = [core_labels[i] for i in bits(s)]
            series_rep[members[0]] = members
        min_degree = 3
    found = search_lift(target, caps, min_degree=min_degree)
    if found.graph is None:
        return ClassVerdict(
            False, None, True, "lift_search", evidence={"graphs_checked": found.graphs_checked}
        )
    return _lift_verdict_core(
        m, target, target_labels, found.graph, found.mapping, series_rep, cls.coloops, "lift_search",
        found.graphs_checked,
    )


def _lift_verdict_core(m, core, core_labels, g, mapping, series_rep, coloops, how, checked):
    full, ident = _expand_witness(g, mapping, m, core_labels, series_rep, coloops)
    return _lift_verdict(m, full, ident, how, checked)


def _lift_verdict(m, g, mapping, how, checked):
    if not check_lift_witness(m, g, mapping):
        raise InconsistencyError(f"lift witness from {how} failed re-verification")
    return ClassVerdict(
        True, _canonical_witness(g, mapping, "bicircular_lift"), True, how,
        evidence={"graphs_checked": checked},
    )


def membership_BL_bar(m: Matroid, caps: Caps = DEFAULT_CAPS) -> ClassVerdict:
    g = is_graphic(m)
    if g.member:
        return g
    b = biclift_witness(m, caps)
    if b.member:
        return b
    return ClassVerdict(False, None, True, f"{g.decided_by};{b.decided_by}", evidence={**g.evidence, **b.evidence})


# ---------------------------------------------------------- representations


def lift_representations(m: Matroid, caps: Caps = DEFAULT_CAPS) -> list[Witness]:
    """Every canonical connected graph realizing ``m`` as a lift, each with one labeling.

    Requires ``m`` connected with at least one circuit.  Uniqueness statements
    need corank at least two; corank one is allowed so the small cases where
    uniqueness fails (``U(2,3)``) can be enumerated too.
    """
    if len(components(m)) != 1 or m.corank < 1:
        raise ValueError("representations are enumerated for connected matroids with a circuit")
    hits = search_lift(m, caps, first_only=False)
    return [Witness(g, "bicircular_lift", iso) for g, iso in hits]


def group_by_2_isomorphism(graphs: list[Multigraph]) -> list[list[Multigraph]]:
    classes: list[list[Multigraph]] = []
    for g in graphs:
        for cls in classes:
            if are_2_isomorphic(cls[0], g, labeled=False):
                cls.append(g)
                break
        else:
            classes.append([g])
    return classes


def all_lift_representations(m: Matroid, caps: Caps = DEFAULT_CAPS) -> list[Multigraph]:
    """One canonical graph per unlabeled 2-isomorphism class of lift representations."""
    reps = [w.graph for w in lift_representations(m, caps)]
    return [cls[0] for cls in group_by_2_isomorphism(reps)]
