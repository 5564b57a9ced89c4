#!/usr/bin/env python3
# Closed intervals and convex hulls on small graphs.
#
# The closed interval of two vertices collects everything on their shortest
# paths; iterating the interval operator over a set grows it to its convex
# hull. This walk-through shows both on a path, a cycle, and a grid-like
# square.

from prismhull import (
    VertexSet,
    all_pairs_distances,
    convex_hull,
    interval_pair,
    interval_set,
    is_convex,
    is_hull_set,
)
from prismhull.families import graph_from_dsl

p5 = graph_from_dsl("path:5")
dm = all_pairs_distances(p5)
print("P5 =", p5.edges())
print("I[0,4] =", interval_pair(p5, dm, 0, 4), "(the whole path)")
print("I[1,3] =", interval_pair(p5, dm, 1, 3))
print("is_convex({1,2,3}) =", is_convex(p5, dm, VertexSet.of(5, [1, 2, 3])))
print("is_convex({0,4})   =", is_convex(p5, dm, VertexSet.of(5, [0, 4])))
print()

c6 = graph_from_dsl("cycle:6")
dm = all_pairs_distances(c6)
print("C6: I[0,2] =", interval_set(c6, dm, VertexSet.of(6, [0, 2])), "(one short arc)")
print("C6: I[0,3] =", interval_set(c6, dm, VertexSet.of(6, [0, 3])), "(two antipodal routes)")
print()

# On C4 two opposite corners already see everything, so the hull fixpoint
# arrives after a single growth step.
c4 = graph_from_dsl("cycle:4")
dm = all_pairs_distances(c4)
trace = convex_hull(c4, dm, VertexSet.of(4, [0, 2]))
for p, step in enumerate(trace.steps[: trace.fixpoint_index + 1]):
    print(f"C4 iterate {p}: {step}")
print("hull set?", is_hull_set(c4, dm, VertexSet.of(4, [0, 2])))
print()

# A longer example where the hull needs several rounds: the two endpoints of
# a path through a lattice of chords.
g = graph_from_dsl("prism(path:4)")
dm = all_pairs_distances(g)
trace = convex_hull(g, dm, VertexSet.of(8, [0, 3]))
print("prism(P4), growing from {0,3}:")
for p, step in enumerate(trace.steps[: trace.fixpoint_index + 1]):
    print(f"  iterate {p}: {step}")
print("fixpoint after", trace.fixpoint_index, "growth steps")
