"""Building bicircular lift matroids and reading them back.

Run: python demos/01_lift_basics.py
"""

from __future__ import annotations

from liftmatroid import Multigraph, lift_matroid, lift_rank, rank_of
from liftmatroid._bits import bits
from liftmatroid.catalog import complete_graph, uniform
from liftmatroid.matroid import element_classes, is_isomorphic
from liftmatroid.multigraph import series_classes


def show(name: str, g: Multigraph) -> None:
    lm = lift_matroid(g)
    sizes = sorted(len(list(bits(c))) for c in lm.circuits)
    print(f"{name}: {g.n} vertices, {g.m} edges -> rank {lm.rank}, {len(lm.circuits)} circuits of sizes {sizes}")


# Four parallel edges: every three of them contain two cycles, so L is U(2,4).
k2_4 = Multigraph(2, [(0, 1)] * 4)
show("K2^4", k2_4)
print("  isomorphic to U(2,4):", is_isomorphic(lift_matroid(k2_4), uniform(2, 4)))

# K4: circuits are the thetas, i.e. all 5-edge subsets.
show("K4", complete_graph(4))

# Two loops in different components still form a circuit: in the lift
# matroid, a pair of vertex-disjoint cycles needs no connecting path.
show("two loops", Multigraph(3, [(0, 0), (1, 1), (1, 2)]))

# The rank formula works for any edge set, not only spanning connected ones.
g = Multigraph(5, [(0, 1), (1, 2), (2, 0), (3, 4), (3, 4)])
lm = lift_matroid(g)
for x in (0b00111, 0b11000, 0b11111):
    print(f"  edges {list(bits(x))}: lift_rank {lift_rank(g, x)}, rank from circuits {rank_of(lm, x)}")

# Series pairs of L(G) are those of G once L(G) has corank 2 or more.
theta = Multigraph(4, [(0, 1), (0, 1), (0, 2), (2, 1), (0, 3), (3, 1)])
print("graph series classes: ", [list(bits(s)) for s in series_classes(theta)])
print("matroid series classes:", [list(bits(s)) for s in element_classes(lift_matroid(theta)).series])

# With a single circuit this breaks: every pair of its elements is in series
# in the matroid, while the graph has genuinely distinct series classes.
caveat = Multigraph(3, [(0, 1), (0, 1), (0, 2), (1, 2)])
print("caveat graph:  ", [list(bits(s)) for s in series_classes(caveat)])
print("caveat matroid:", [list(bits(s)) for s in element_classes(lift_matroid(caveat)).series])
