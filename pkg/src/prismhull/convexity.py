"""Geodetic intervals, the iterated interval operator, and convex hulls.

The closed interval of a vertex pair collects the endpoints together with
every vertex on any shortest path between them; the interval of a set is the
union over its pairs. Iterating the interval operator from a set grows it
monotonically until it stops changing, and that fixpoint is the geodetic
convex hull of the set.

All functions here are pure: they take an immutable graph, a distance matrix
precomputed once per graph, and a vertex set, and they return new values.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import UNREACHABLE, Graph, VertexSet, bfs_distances


class DistanceMatrix:
    """All-pairs hop distances, with UNREACHABLE for cross-component pairs."""

    __slots__ = ("n", "_rows")

    def __init__(self, rows: tuple[tuple[int | float, ...], ...]):
        self.n = len(rows)
        self._rows = rows

    def dist(self, u: int, v: int) -> int | float:
        return self._rows[u][v]

    def row(self, u: int) -> tuple[int | float, ...]:
        return self._rows[u]

    def __repr__(self) -> str:
        return f"DistanceMatrix(n={self.n})"


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """Breadth-first distances from every vertex."""
    return DistanceMatrix(tuple(tuple(bfs_distances(g, v)) for v in range(g.n)))


def interval_pair(g: Graph, dm: DistanceMatrix, u: int, v: int) -> VertexSet:
    """The closed interval of u and v.

    Contains u, v, and every vertex on some shortest u-v path. When u and v
    lie in different components there is no path, so only the endpoints are
    included; the interval of a vertex with itself is the singleton.
    """
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return VertexSet.of(g.n, (u,))
    duv = dm.dist(u, v)
    if duv == UNREACHABLE:
        return VertexSet.of(g.n, (u, v))
    du = dm.row(u)
    dv = dm.row(v)
    mask = 0
    for w in range(g.n):
        if du[w] + dv[w] == duv:
            mask |= 1 << w
    return VertexSet(g.n, mask)


def interval_set(g: Graph, dm: DistanceMatrix, s: VertexSet) -> VertexSet:
    """Union of the closed intervals over all pairs of s; always contains s."""
    mask = s.mask
    for u, v in itertools.combinations(s, 2):
        mask |= interval_pair(g, dm, u, v).mask
    return VertexSet(g.n, mask)


@dataclass(frozen=True)
class HullTrace:
    """The iterates of the interval operator, from the seed to its fixpoint.

    steps[p] is the p-th iterate; every step grows strictly except the last,
    which repeats steps[fixpoint_index] and witnesses that it is convex.
    """

    steps: tuple[VertexSet, ...]
    fixpoint_index: int

    @property
    def final(self) -> VertexSet:
        return self.steps[self.fixpoint_index]


def convex_hull(g: Graph, dm: DistanceMatrix, s: VertexSet) -> HullTrace:
    """Iterate the interval operator from s until it stops growing."""
    steps = [s]
    current = s
    # each strict step adds a vertex, so n iterations always suffice
    for _ in range(g.n + 1):
        grown = interval_set(g, dm, current)
        steps.append(grown)
        if grown == current:
            return HullTrace(tuple(steps), len(steps) - 2)
        current = grown
    raise AssertionError("interval iteration failed to reach a fixpoint")


def is_convex(g: Graph, dm: DistanceMatrix, s: VertexSet) -> bool:
    """True iff the interval operator maps s to itself."""
    return interval_set(g, dm, s) == s


def is_hull_set(g: Graph, dm: DistanceMatrix, s: VertexSet) -> bool:
    """True iff the convex hull of s is the whole vertex set."""
    return convex_hull(g, dm, s).final == VertexSet.full(g.n)
