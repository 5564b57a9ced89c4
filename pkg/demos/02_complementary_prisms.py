#!/usr/bin/env python3
# Building complementary prisms and reading off their structure.
#
# The prism of a graph on n vertices keeps the graph on 0..n-1, places its
# complement on n..2n-1, and matches i with n+i. Its edge count is always
# n(n-1)/2 + n, whatever the graph.

from prismhull import (
    complement,
    complementary_prism,
    diameter,
    format_edgelist,
    induced_subgraph,
    simplicial_vertices,
    VertexSet,
)
from prismhull.families import graph_from_dsl

for dsl in ("complete:3", "star:3", "path:4", "cycle:5"):
    g = graph_from_dsl(dsl)
    p = complementary_prism(g)
    print(f"{dsl}: n={g.n} m={g.m}  ->  prism n={p.n} m={p.m}, diameter {diameter(p)}")
print()

# The low block is the graph, the high block is its complement.
g = graph_from_dsl("path:4")
p = complementary_prism(g)
low, _ = induced_subgraph(p, VertexSet.of(8, range(4)))
high, _ = induced_subgraph(p, VertexSet.of(8, range(4, 8)))
print("low block == P4:", low == g)
print("high block == complement(P4):", high == complement(g))
print()

# Simplicial vertices drive everything downstream: they are exactly the
# vertices every hull set must contain. In the prism of a star, only the
# center's partner is simplicial (it is isolated in the complement block).
s3 = graph_from_dsl("star:3")
print("simplicial in star:", simplicial_vertices(s3))
print("simplicial in prism(star):", simplicial_vertices(complementary_prism(s3)))
print()

# Prisms serialize like any other graph.
print("prism(complete:3) as an edge list:")
print(format_edgelist(complementary_prism(graph_from_dsl("complete:3"))), end="")
