"""Deciding "graphic", "bicircular lift", and their union, with witnesses.

Run: python demos/02_membership.py
"""

from __future__ import annotations

from liftmatroid import biclift_witness, catalog_get, is_graphic, membership_BL_bar, two_sum, uniform
from liftmatroid.membership import all_lift_representations
from liftmatroid.realize import Caps


def verdict(name, m, v) -> None:
    tag = "member" if v.member else "not a member"
    print(f"  {name}: {tag} (decided by {v.decided_by})")
    if v.witness is not None:
        print(f"    {v.witness.kind} witness on {v.witness.graph.n} vertices: {list(v.witness.graph.edges)}")


print("graphic?")
for name in ("MK4", "uniform(2,4)", "dualK5"):
    m = catalog_get(name)
    verdict(name, m, is_graphic(m))

print("bicircular lift?")
for name in ("uniform(2,4)", "uniform(4,6)", "dualK5", "F7"):
    m = catalog_get(name)
    verdict(name, m, biclift_witness(m))

# 2-sums with U(2,4) are lifts: the witness glues the two pieces.
print("2-sums with U(2,4):")
u24 = uniform(2, 4)
for label, other in (("U(2,3)", uniform(2, 3)), ("U(2,4)", u24), ("U(1,3)", uniform(1, 3))):
    verdict(f"U(2,4) (+)2 {label}", None, biclift_witness(two_sum(u24, other, 0, 0)))

print("graphic or lift?")
for name in ("F7", "MK4", "whirl(3)"):
    verdict(name, None, membership_BL_bar(catalog_get(name)))

# Lines longer than the multiplicity cap cannot be ruled out, so the search
# refuses to answer rather than saying "no".
u26 = uniform(2, 6)
try:
    biclift_witness(u26)
except Exception as exc:  # ResourceError
    print(f"U(2,6) with default caps: {type(exc).__name__}: {exc}")
verdict("U(2,6) with max_parallel=6", u26, biclift_witness(u26, Caps(max_parallel=6)))

# Representations need not be unique for tiny matroids.
print("lift representations of U(2,3), one per 2-isomorphism class:")
for g in all_lift_representations(uniform(2, 3)):
    print("   ", list(g.edges))
