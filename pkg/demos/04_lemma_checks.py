"""Mechanical checks of structural lemmas, and two counterexamples.

Each row runs a predicate over an exhaustive small family plus a seeded
random extension.  Counterexamples are stored as serialized instances and
replay through the public API.

Run: python demos/04_lemma_checks.py        (about 10 s)
"""

from __future__ import annotations

from liftmatroid import lift_matroid, matroid_minor, replay, verify_lemma
from liftmatroid.lemmas import graph_to_obj
from liftmatroid.matroid import cosimplify_matroid
from liftmatroid.multigraph import Multigraph

for lemma_id in ("series_pair", "series_pair_caveat", "graphic_is_K2n", "k4_not_biclift", "parallel_u2k"):
    r = verify_lemma(lemma_id)
    note = " (expected failure row)" if r.expected_failure else ""
    print(f"{lemma_id:20s} {r.instances_checked:5d} instances, {len(r.counterexamples)} counterexamples, "
          f"pass={r.passed}{note}")

# The deletion inequality r(co(N\e)) >= r(co(N)) - 2 fails on this graph:
# three digons in a path, closed by one extra edge.
g = Multigraph(4, [(0, 1), (0, 1), (0, 2), (0, 2), (1, 3), (1, 3), (2, 3)])
n = lift_matroid(g)
co_n = cosimplify_matroid(n).matroid.rank
co_del = cosimplify_matroid(matroid_minor(n, delete=1 << 6).matroid).matroid.rank
print(f"\ndeletion rank: r(co(N)) = {co_n}, r(co(N\\e)) = {co_del} for e = (2,3); bound {co_n - 2} violated")
print("  replays as a violation:", replay("del_rank", {"graph": graph_to_obj(g)}))
# Deleting e leaves every digon as a series pair, so co(N\e) collapses.

# The 2-sum decomposition row fails when one side is a single circuit.
r = verify_lemma("two_sum_decomposition")
print(f"\ntwo_sum_decomposition: {len(r.counterexamples)} counterexamples out of {r.instances_checked}")
for inst in r.counterexamples:
    print(f"  {inst['names'][0]} (+)2 {inst['names'][1]}: {inst['detail']['reason']}")
# U(3,5) is a single circuit; its only lift representation has no loop,
# so it cannot play the part of a side carrying the basepoint as a loop.
