"""Named matroids: uniform, Fano and its dual, small graphic duals, wheels and whirls."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from ._bits import to_mask
from .matroid import Matroid, dual, find_isomorphism, is_binary, rank_of
from .multigraph import Multigraph, cycle_matroid

FANO_LINES = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    matroid: Matroid
    notes: str


def uniform(r: int, n: int) -> Matroid:
    if not 0 <= r <= n:
        raise ValueError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    circuits = [to_mask(c) for c in combinations(range(n), r + 1)] if r < n else []
    m = Matroid(n, circuits)
    m._rank = r
    return m


def fano() -> Matroid:
    lines = [to_mask(line) for line in FANO_LINES]
    full = (1 << 7) - 1
    return Matroid(7, lines + [full & ~line for line in lines])


def complete_graph(k: int) -> Multigraph:
    return Multigraph(k, list(combinations(range(k), 2)))


def complete_bipartite(a: int, b: int) -> Multigraph:
    return Multigraph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def wheel_graph(k: int) -> Multigraph:
    """Hub 0, rim 1..k; spokes are edges 0..k-1, rim edges follow."""
    if k < 2:
        raise ValueError("a wheel needs at least 2 spokes")
    spokes = [(0, i) for i in range(1, k + 1)]
    rim = [(i, i % k + 1) for i in range(1, k + 1)]
    return Multigraph(k + 1, spokes + rim)


def wheel(k: int) -> Matroid:
    return cycle_matroid(wheel_graph(k))


def whirl(k: int) -> Matroid:
    """Relax the rim circuit-hyperplane of the rank-k wheel."""
    w = wheel(k)
    rim = to_mask(range(k, 2 * k))
    circuits = [c for c in w.circuits if c != rim]
    circuits += [rim | (1 << s) for s in range(k)]
    return Matroid(2 * k, circuits)


_PARAM = re.compile(r"^(uniform|wheel|whirl)\((\d+)(?:,(\d+))?\)$")


def catalog_entry(name: str) -> CatalogEntry:
    key = name.replace(" ", "")
    match = _PARAM.match(key)
    if match:
        kind, a, b = match.group(1), int(match.group(2)), match.group(3)
        if kind == "uniform":
            if b is None:
                raise KeyError(f"uniform needs two parameters: {name!r}")
            return CatalogEntry(key, uniform(a, int(b)), f"all {a + 1}-subsets of {b} elements")
        if b is not None:
            raise KeyError(f"{kind} takes one parameter: {name!r}")
        if kind == "wheel":
            return CatalogEntry(key, wheel(a), f"cycle matroid of the {a}-spoke wheel")
        return CatalogEntry(key, whirl(a), f"rim relaxation of the {a}-spoke wheel")
    if key == "F7":
        return CatalogEntry("F7", fano(), "Fano plane: 7 lines plus their complements")
    if key == "F7dual":
        return CatalogEntry("F7dual", dual(fano()), "dual of the Fano plane")
    if key == "MK4":
        return CatalogEntry("MK4", cycle_matroid(complete_graph(4)), "cycle matroid of K4")
    if key == "dualK5":
        return CatalogEntry("dualK5", dual(cycle_matroid(complete_graph(5))), "bond matroid of K5")
    if key == "dualK33":
        return CatalogEntry("dualK33", dual(cycle_matroid(complete_bipartite(3, 3))), "bond matroid of K3,3")
    raise KeyError(f"unknown catalog name {name!r}")


def catalog_get(name: str) -> Matroid:
    return catalog_entry(name).matroid


# the fixed list iterated by whole-catalog checks
BUILTIN_NAMES = (
    "uniform(0,1)",
    "uniform(1,1)",
    "uniform(1,2)",
    "uniform(1,3)",
    "uniform(2,3)",
    "uniform(2,4)",
    "uniform(2,5)",
    "uniform(3,5)",
    "uniform(3,6)",
    "uniform(4,6)",
    "F7",
    "F7dual",
    "MK4",
    "dualK5",
    "dualK33",
    "wheel(3)",
    "wheel(4)",
    "whirl(2)",
    "whirl(3)",
    "whirl(4)",
)


def builtin_catalog() -> list[CatalogEntry]:
    return [catalog_entry(name) for name in BUILTIN_NAMES]


def self_test() -> list[str]:
    """Check the named matroids against independent facts; returns failures."""
    failures = []
    f7 = fano()
    if (f7.n, rank_of(f7, f7.ground), len(f7.circuits)) != (7, 3, 14):
        failures.append("F7 shape")
    if find_isomorphism(dual(f7), catalog_get("F7dual")) is None:
        failures.append("dual(F7) vs F7dual")
    if find_isomorphism(f7, dual(f7)) is not None:
        failures.append("F7 isomorphic to its dual")
    if not is_binary(f7):
        failures.append("F7 not binary")
    if find_isomorphism(whirl(2), uniform(2, 4)) is None:
        failures.append("whirl(2) vs U2,4")
    for k in (3, 4):
        if wheel(k) != cycle_matroid(wheel_graph(k)):
            failures.append(f"wheel({k})")
        if is_binary(whirl(k)):
            failures.append(f"whirl({k}) binary")
        if find_isomorphism(wheel(k), whirl(k)) is not None:
            failures.append(f"wheel({k}) isomorphic to whirl({k})")
    mk5 = catalog_get("dualK5")
    if (mk5.n, mk5.rank) != (10, 6):
        failures.append("dualK5 shape")
    mk33 = catalog_get("dualK33")
    if (mk33.n, mk33.rank) != (9, 4):
        failures.append("dualK33 shape")
    return failures
