"""Explicit-circuit matroids on at most 32 elements.

Circuits are ``int`` bitmasks kept in lexicographic order of their sorted
element tuples.  Every operation is a pure function returning a new
:class:`Matroid`; derived matroids that drop elements also report
``labels[i]`` = the source element behind new element ``i``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator, NamedTuple, Optional

from ._bits import bits, full_mask, minimal_sets, popcount, sort_key, to_mask
from .errors import CapacityError, MatroidAxiomError, ResourceError

MAX_ELEMENTS = 32
DEFAULT_NODE_BUDGET = 5_000_000


class Matroid:
    __slots__ = ("n", "circuits", "_cset", "_by_elem", "_rank", "_dual")

    def __init__(self, n: int, circuits: Iterable[int] = ()):
        # trusted constructor: callers guarantee the circuit axioms
        if n > MAX_ELEMENTS:
            raise CapacityError(f"{n} elements exceeds the {MAX_ELEMENTS}-element cap")
        cs = tuple(sorted(set(circuits), key=sort_key))
        self.n = n
        self.circuits = cs
        self._cset = frozenset(cs)
        self._by_elem = None
        self._rank = None
        self._dual = None

    @property
    def ground(self) -> int:
        return full_mask(self.n)

    @property
    def by_element(self) -> tuple[tuple[int, ...], ...]:
        if self._by_elem is None:
            by: list[list[int]] = [[] for _ in range(self.n)]
            for c in self.circuits:
                for e in bits(c):
                    by[e].append(c)
            self._by_elem = tuple(tuple(b) for b in by)
        return self._by_elem

    @property
    def rank(self) -> int:
        if self._rank is None:
            self._rank = rank_of(self, self.ground)
        return self._rank

    @property
    def corank(self) -> int:
        return self.n - self.rank

    def is_circuit(self, x: int) -> bool:
        return x in self._cset

    def is_independent(self, x: int) -> bool:
        return not any(c & x == c for c in self.circuits)

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.n == other.n and self.circuits == other.circuits

    def __hash__(self):
        return hash((self.n, self.circuits))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, circuits={len(self.circuits)})"


class Derived(NamedTuple):
    matroid: Matroid
    labels: tuple[int, ...]


def from_circuits(n: int, circuits: Iterable[Iterable[int] | int]) -> Matroid:
    """Validated constructor; circuits may be bitmasks or element iterables."""
    if n > MAX_ELEMENTS:
        raise CapacityError(f"{n} elements exceeds the {MAX_ELEMENTS}-element cap")
    masks = []
    for c in circuits:
        mask = c if isinstance(c, int) else to_mask(c)
        if not mask:
            raise MatroidAxiomError("the empty set is not a circuit")
        if mask >> n:
            raise MatroidAxiomError(f"circuit {sort_key(mask)} leaves the ground set 0..{n - 1}")
        masks.append(mask)
    masks = sorted(set(masks), key=sort_key)
    for a, b in combinations(masks, 2):
        if a & b == a or a & b == b:
            raise MatroidAxiomError(f"circuit {sort_key(a)} and circuit {sort_key(b)} are nested")
    for a, b in combinations(masks, 2):
        common = a & b
        if not common:
            continue
        union = a | b
        inside = [c for c in masks if c & ~union == 0]
        for e in bits(common):
            if not any(not (c >> e) & 1 for c in inside):
                raise MatroidAxiomError(
                    f"circuits {sort_key(a)} and {sort_key(b)} fail elimination at element {e}"
                )
    return Matroid(n, masks)


def rank_of(m: Matroid, x: int) -> int:
    """Greedy rank: grow an independent set through ``x`` in element order."""
    by = m.by_element
    indep = 0
    r = 0
    for e in bits(x):
        t = indep | (1 << e)
        for c in by[e]:
            if c & ~t == 0:
                break
        else:
            indep = t
            r += 1
    return r


def basis_of(m: Matroid, x: int) -> int:
    by = m.by_element
    indep = 0
    for e in bits(x):
        t = indep | (1 << e)
        if all(c & ~t for c in by[e]):
            indep = t
    return indep


def closure(m: Matroid, x: int) -> int:
    b = basis_of(m, x)
    out = x
    by = m.by_element
    for e in bits(m.ground & ~x):
        t = b | (1 << e)
        if any(c & ~t == 0 for c in by[e]):
            out |= 1 << e
    return out


def hyperplanes(m: Matroid) -> list[int]:
    r = m.rank
    if r == 0:
        return []
    found = set()
    for comb in combinations(range(m.n), r - 1):
        s = to_mask(comb)
        if rank_of(m, s) == r - 1:
            found.add(closure(m, s))
    return sorted(found, key=sort_key)


def cocircuits(m: Matroid) -> list[int]:
    """Complements of hyperplanes: the minimal sets meeting every basis."""
    g = m.ground
    return sorted((g & ~h for h in hyperplanes(m)), key=sort_key)


def dual(m: Matroid) -> Matroid:
    if m._dual is None:
        d = Matroid(m.n, cocircuits(m))
        d._rank = m.n - m.rank
        d._dual = m
        m._dual = d
    return m._dual


def _compress(masks: Iterable[int], keep: int) -> tuple[list[int], tuple[int, ...]]:
    labels = tuple(bits(keep))
    index = {old: new for new, old in enumerate(labels)}
    out = []
    for c in masks:
        out.append(to_mask(index[e] for e in bits(c)))
    return out, labels


def restriction(m: Matroid, x: int) -> Derived:
    return matroid_minor(m, delete=m.ground & ~x)


def matroid_minor(m: Matroid, delete: int = 0, contract: int = 0) -> Derived:
    """``m \\ delete / contract`` relabeled densely in element order.

    Contraction uses the circuit formula: the circuits of ``M/T`` are the
    minimal nonempty sets ``C - T``.  :func:`contract_via_dual` is the
    independent dual route.
    """
    if delete & contract:
        raise ValueError("delete and contract sets overlap")
    keep = m.ground & ~(delete | contract)
    cs = [c & ~contract for c in m.circuits if not c & delete]
    if contract:
        cs = minimal_sets(cs)
    masks, labels = _compress(cs, keep)
    return Derived(Matroid(popcount(keep), masks), labels)


def contract_via_dual(m: Matroid, contract: int) -> Derived:
    """``M/T = (M* \\ T)*``."""
    d, labels = matroid_minor(dual(m), delete=contract)
    return Derived(dual(d), labels)


def delete_element(m: Matroid, e: int) -> Matroid:
    return matroid_minor(m, delete=1 << e).matroid


def contract_element(m: Matroid, e: int) -> Matroid:
    return matroid_minor(m, contract=1 << e).matroid


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Ground set of ``m2`` is shifted by ``m1.n``."""
    if m1.n + m2.n > MAX_ELEMENTS:
        raise CapacityError(f"{m1.n + m2.n} elements exceeds the {MAX_ELEMENTS}-element cap")
    out = Matroid(m1.n + m2.n, list(m1.circuits) + [c << m1.n for c in m2.circuits])
    out._rank = m1.rank + m2.rank
    return out


def is_loop(m: Matroid, e: int) -> bool:
    return (1 << e) in m._cset


def is_coloop(m: Matroid, e: int) -> bool:
    return not m.by_element[e]


def two_sum(m1: Matroid, m2: Matroid, e1: int, e2: int) -> Matroid:
    """2-sum along basepoints ``e1`` of ``m1`` and ``e2`` of ``m2``.

    New ground: elements of ``m1`` other than ``e1`` in order, then those
    of ``m2`` other than ``e2``.
    """
    for which, m, e in (("first", m1, e1), ("second", m2, e2)):
        if is_loop(m, e) or is_coloop(m, e):
            raise ValueError(f"basepoint {e} is a loop or coloop of the {which} matroid")
    n1 = m1.n - 1
    if n1 + m2.n - 1 > MAX_ELEMENTS:
        raise CapacityError("2-sum exceeds the element cap")
    keep1 = m1.ground & ~(1 << e1)
    keep2 = m2.ground & ~(1 << e2)
    a_plain, _ = _compress([c for c in m1.circuits if not (c >> e1) & 1], keep1)
    a_cross, _ = _compress([c & ~(1 << e1) for c in m1.circuits if (c >> e1) & 1], keep1)
    b_plain, _ = _compress([c for c in m2.circuits if not (c >> e2) & 1], keep2)
    b_cross, _ = _compress([c & ~(1 << e2) for c in m2.circuits if (c >> e2) & 1], keep2)
    cs = a_plain + [c << n1 for c in b_plain]
    cs += [a | (b << n1) for a in a_cross for b in b_cross]
    return Matroid(n1 + m2.n - 1, cs)


def components(m: Matroid) -> list[int]:
    """Connected components, ordered by smallest element."""
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in m.circuits:
        first = (c & -c).bit_length() - 1
        for e in bits(c):
            a, b = find(first), find(e)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, int] = {}
    for e in range(m.n):
        groups[find(e)] = groups.get(find(e), 0) | (1 << e)
    return sorted(groups.values(), key=lambda c: c & -c)


def is_connected(m: Matroid) -> bool:
    return len(components(m)) <= 1


class Connectivity(NamedTuple):
    kind: str  # "disconnected", "connected_not_3", "three_connected"
    separation: Optional[tuple[int, int]] = None


def connectivity_order(m: Matroid, max_elements: int = 24) -> Connectivity:
    """Classify by 1- and 2-separations.

    The witness is the separation ``(X, Y)`` with ``0 in X`` and ``X``
    smallest as an integer bitmask.  For a 1-separation that is the
    component containing element 0.
    """
    g = m.ground
    comps = components(m)
    if len(comps) > 1:
        return Connectivity("disconnected", (comps[0], g & ~comps[0]))
    if m.n < 4:
        return Connectivity("three_connected")
    if m.n > max_elements:
        raise ResourceError(
            f"2-separation scan over {m.n} elements exceeds max_elements={max_elements}",
            {"elements": m.n},
        )
    r = m.rank
    for x in range(1, 1 << m.n, 2):
        y = g & ~x
        if popcount(x) < 2 or popcount(y) < 2:
            continue
        if rank_of(m, x) + rank_of(m, y) - r <= 1:
            return Connectivity("connected_not_3", (x, y))
    return Connectivity("three_connected")


class ElementClasses(NamedTuple):
    loops: int
    coloops: int
    parallel: tuple[int, ...]
    series: tuple[int, ...]


def _membership_vectors(m: Matroid) -> list[int]:
    vec = [0] * m.n
    for k, c in enumerate(m.circuits):
        for e in bits(c):
            vec[e] |= 1 << k
    return vec


def element_classes(m: Matroid) -> ElementClasses:
    """Loops, coloops, and the non-trivial parallel and series classes."""
    loops = 0
    parallel_groups: dict[int, int] = {}
    for c in m.circuits:
        pc = popcount(c)
        if pc == 1:
            loops |= c
    parent = list(range(m.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in m.circuits:
        if popcount(c) == 2:
            a, b = bits(c)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    for e in range(m.n):
        parallel_groups[find(e)] = parallel_groups.get(find(e), 0) | (1 << e)
    parallel = tuple(sorted((p for p in parallel_groups.values() if popcount(p) > 1), key=lambda c: c & -c))

    vec = _membership_vectors(m)
    coloops = to_mask(e for e in range(m.n) if not vec[e])
    series_groups: dict[int, int] = {}
    for e in range(m.n):
        if vec[e]:
            series_groups[vec[e]] = series_groups.get(vec[e], 0) | (1 << e)
    series = tuple(sorted((s for s in series_groups.values() if popcount(s) > 1), key=lambda c: c & -c))
    return ElementClasses(loops, coloops, parallel, series)


def cosimplify_matroid(m: Matroid) -> Derived:
    """``co(N)``: contract coloops, then all but the smallest element of each series class."""
    labels = tuple(range(m.n))
    while True:
        cls = element_classes(m)
        contract = cls.coloops
        for s in cls.series:
            contract |= s & ~(s & -s)
        if not contract:
            return Derived(m, labels)
        m, sub = matroid_minor(m, contract=contract)
        labels = tuple(labels[i] for i in sub)


def simplify_matroid(m: Matroid) -> Derived:
    """Delete loops and all but the smallest element of each parallel class."""
    cls = element_classes(m)
    drop = cls.loops
    for p in cls.parallel:
        drop |= p & ~(p & -p)
    return matroid_minor(m, delete=drop)


# ---------------------------------------------------------------- isomorphism


def _joint_colors(ms: list[Matroid], rounds: int = 2) -> list[list[int]]:
    cols = [[tuple(sorted(popcount(c) for c in m.by_element[e])) for e in range(m.n)] for m in ms]
    for _ in range(rounds + 1):
        table = {sig: i for i, sig in enumerate(sorted({s for col in cols for s in col}))}
        ints = [[table[s] for s in col] for col in cols]
        if _ == rounds:
            return ints
        new = []
        for m, col in zip(ms, ints):
            sigs = []
            for e in range(m.n):
                sigs.append(
                    (
                        col[e],
                        tuple(
                            sorted(
                                (popcount(c), tuple(sorted(col[f] for f in bits(c) if f != e)))
                                for c in m.by_element[e]
                            )
                        ),
                    )
                )
            new.append(sigs)
        cols = new
    raise AssertionError("unreachable")


def _search_order(m: Matroid, colors: list[int]) -> list[int]:
    size = {}
    for c in colors:
        size[c] = size.get(c, 0) + 1
    order: list[int] = []
    placed = 0
    remaining = set(range(m.n))
    while remaining:

        def score(e):
            t = placed | (1 << e)
            closed = sum(1 for c in m.by_element[e] if c & ~t == 0)
            touching = sum(1 for c in m.by_element[e] if c & placed)
            return (-closed, -touching, size[colors[e]], e)

        e = min(remaining, key=score)
        order.append(e)
        placed |= 1 << e
        remaining.discard(e)
    return order


def iter_isomorphisms(m1: Matroid, m2: Matroid, budget: int = DEFAULT_NODE_BUDGET) -> Iterator[tuple[int, ...]]:
    """Every bijection ``p`` (``p[e]`` = image of ``e``) carrying circuits onto circuits,
    in backtracking order."""
    if m1.n != m2.n or len(m1.circuits) != len(m2.circuits):
        return
    if sorted(map(popcount, m1.circuits)) != sorted(map(popcount, m2.circuits)):
        return
    if m1.n == 0:
        yield ()
        return
    c1, c2 = _joint_colors([m1, m2])
    if sorted(c1) != sorted(c2):
        return
    order = _search_order(m1, c1)
    pos = {e: i for i, e in enumerate(order)}
    closing: list[list[int]] = [[] for _ in order]
    for c in m1.circuits:
        closing[max(pos[e] for e in bits(c))].append(c)
    by_color: dict[int, list[int]] = {}
    for f in range(m2.n):
        by_color.setdefault(c2[f], []).append(f)
    target = m2._cset
    image = [-1] * m1.n
    used = [False] * m2.n
    nodes = 0

    def extend(i: int):
        nonlocal nodes
        if i == len(order):
            yield tuple(image)
            return
        e = order[i]
        for f in by_color[c1[e]]:
            if used[f]:
                continue
            nodes += 1
            if nodes > budget:
                raise ResourceError("isomorphism search exceeded its node budget", {"nodes": nodes})
            image[e] = f
            ok = True
            for c in closing[i]:
                img = 0
                for x in bits(c):
                    img |= 1 << image[x]
                if img not in target:
                    ok = False
                    break
            if ok:
                used[f] = True
                yield from extend(i + 1)
                used[f] = False
        image[e] = -1

    yield from extend(0)


def find_isomorphism(m1: Matroid, m2: Matroid, budget: int = DEFAULT_NODE_BUDGET) -> Optional[tuple[int, ...]]:
    """The first isomorphism in backtracking order, or None."""
    return next(iter_isomorphisms(m1, m2, budget), None)


def is_isomorphic(m1: Matroid, m2: Matroid) -> bool:
    return find_isomorphism(m1, m2) is not None


def permute(m: Matroid, p: tuple[int, ...]) -> Matroid:
    """Relabel element ``e`` as ``p[e]``."""
    return Matroid(m.n, [to_mask(p[e] for e in bits(c)) for c in m.circuits])


class MinorWitness(NamedTuple):
    delete: int
    contract: int
    mapping: tuple[int, ...]  # target element -> element of m


def has_minor_isomorphic(
    m: Matroid,
    target: Matroid,
    keep: Optional[int] = None,
    budget: int = DEFAULT_NODE_BUDGET,
) -> Optional[MinorWitness]:
    """Search for ``m \\ D / I ≅ target`` with ``I`` independent and ``D`` coindependent.

    ``keep`` forces an element of ``m`` to survive into the minor.  The
    first witness in lexicographic ``(I, kept set)`` order is returned.
    """
    k = m.rank - target.rank
    d = m.corank - target.corank
    if k < 0 or d < 0:
        return None
    t_cls = element_classes(target)
    t_loopless = not t_cls.loops
    t_simple = t_loopless and not t_cls.parallel
    t_hist = sorted(map(popcount, target.circuits))
    size = target.n
    avail = [e for e in range(m.n) if e != keep]
    nodes = 0
    for comb in combinations(avail, k):
        contract = to_mask(comb)
        if rank_of(m, contract) != k:
            continue
        mc = [c & ~contract for c in m.circuits]
        mc = minimal_sets(mc) if contract else list(m.circuits)
        rest = m.ground & ~contract
        mloops = 0
        pclass = {e: e for e in bits(rest)}
        for c in mc:
            if popcount(c) == 1:
                mloops |= c
            elif popcount(c) == 2:
                a, b = bits(c)
                ra, rb = pclass[a], pclass[b]
                while pclass[ra] != ra:
                    ra = pclass[ra]
                while pclass[rb] != rb:
                    rb = pclass[rb]
                if ra != rb:
                    pclass[max(ra, rb)] = min(ra, rb)
        cand = [e for e in bits(rest) if not (t_loopless and (mloops >> e) & 1)]
        root = {}
        for e in cand:
            r = e
            while pclass[r] != r:
                r = pclass[r]
            root[e] = r
        if keep is not None:
            if keep not in root:
                continue
            others = [e for e in cand if e != keep]
            choices = (tuple(sorted((keep,) + rest_k)) for rest_k in combinations(others, size - 1))
        else:
            choices = combinations(cand, size)
        for kept in choices:
            if t_simple and len({root[e] for e in kept}) != size:
                continue
            nodes += 1
            if nodes > budget:
                raise ResourceError("minor search exceeded its node budget", {"nodes": nodes})
            km = to_mask(kept)
            sub = [c for c in mc if c & ~km == 0]
            if len(sub) != len(target.circuits) or sorted(map(popcount, sub)) != t_hist:
                continue
            masks, labels = _compress(sub, km)
            minor = Matroid(size, masks)
            if minor.rank != target.rank:
                continue
            iso = find_isomorphism(target, minor)
            if iso is not None:
                return MinorWitness(rest & ~km, contract, tuple(labels[iso[i]] for i in range(size)))
    return None


def are_clones(m: Matroid, x: int, y: int) -> bool:
    if x == y:
        raise ValueError("clones are defined for distinct elements")
    bx, by = 1 << x, 1 << y
    for c in m.circuits:
        if bool(c & bx) != bool(c & by):
            swapped = c ^ bx ^ by
            if swapped not in m._cset:
                return False
    return True


def max_line_size(m: Matroid) -> int:
    """Largest ``k`` with a ``U(2,k)`` restriction (``k >= 3``), else 2 or less.

    The points of a line through ``a`` and ``b`` are ``a``, ``b`` and every
    ``c`` with ``{a, b, c}`` a circuit, counted up to parallelism.
    """
    cls = element_classes(m)
    point = list(range(m.n))
    for p in cls.parallel:
        low = (p & -p).bit_length() - 1
        for e in bits(p):
            point[e] = low
    nonloops = [e for e in range(m.n) if not (cls.loops >> e) & 1]
    best = min(2, len({point[e] for e in nonloops}))
    seen = set()
    for c in m.circuits:
        if popcount(c) != 3:
            continue
        a, b, _ = bits(c)
        key = (point[a], point[b])
        if key in seen:
            continue
        seen.add(key)
        line = {point[a], point[b]}
        for d in m.by_element[a]:
            if popcount(d) == 3 and (d >> b) & 1:
                line.add(point[(d & ~((1 << a) | (1 << b))).bit_length() - 1])
        best = max(best, len(line))
    return best


def has_U25_restriction(m: Matroid) -> bool:
    """True iff some rank-2 flat carries at least five distinct points."""
    return max_line_size(m) >= 5


def is_binary(m: Matroid) -> bool:
    """Every circuit meets every cocircuit in an even number of elements."""
    cc = cocircuits(m)
    return all(popcount(c & d) % 2 == 0 for c in m.circuits for d in cc)
