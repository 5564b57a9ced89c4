"""Immutable simple graphs on vertices 0..n-1 and their structural operations.

Graphs are value types: every operation returns a new graph, so instances can
be shared freely across threads. Vertex sets are bitmask-backed, which keeps
membership tests, set algebra, and equality cheap inside the search loops that
dominate this package.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from typing import Iterable, Iterator

from .errors import VertexRangeError

#: Distance reported between vertices in different components. Compares
#: above every finite hop count.
UNREACHABLE = math.inf


class VertexSet:
    """An immutable subset of the vertices 0..n-1 of an n-vertex graph.

    Iteration yields members in ascending order. Set algebra is only defined
    between sets over the same universe size.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if n < 0:
            raise ValueError(f"universe size must be non-negative, got {n}")
        if mask < 0 or mask >> n:
            raise VertexRangeError(f"member outside vertex range [0, {n})")
        self.n = n
        self.mask = mask

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise VertexRangeError(f"vertex {v} outside range [0, {n})")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and (self.mask >> v) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _check_universe(self, other: "VertexSet") -> None:
        if self.n != other.n:
            raise ValueError(
                f"mixed universes: {self.n} vs {other.n} vertices"
            )

    def __or__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        self._check_universe(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        """All universe vertices not in this set."""
        return VertexSet(self.n, ~self.mask & ((1 << self.n) - 1))

    def issubset(self, other: "VertexSet") -> bool:
        self._check_universe(other)
        return self.mask & ~other.mask == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{','.join(str(v) for v in self)}}})"


class Graph:
    """A finite simple undirected graph on vertices 0..n-1.

    Construct from a vertex count and an edge iterable; duplicate edges
    collapse, self-loops and out-of-range endpoints are rejected.
    """

    __slots__ = ("n", "_neigh", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        neigh = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(
                    f"edge ({u},{v}) outside vertex range [0, {n})"
                )
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            neigh[u] |= 1 << v
            neigh[v] |= 1 << u
        self.n = n
        self._neigh = tuple(neigh)
        self._hash = hash((n, self._neigh))

    @property
    def m(self) -> int:
        """Number of edges."""
        return sum(mask.bit_count() for mask in self._neigh) // 2

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        out = []
        for u in range(self.n):
            rest = self._neigh[u] >> (u + 1)
            v = u + 1
            while rest:
                if rest & 1:
                    out.append((u, v))
                rest >>= 1
                v += 1
        return out

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return (self._neigh[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.n, self._neigh[v])

    def neighbor_mask(self, v: int) -> int:
        return self._neigh[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._neigh[v].bit_count()

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(f"vertex {v} outside range [0, {self.n})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._neigh == other._neigh

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def complement(g: Graph) -> Graph:
    """The graph on the same vertices whose edges are exactly the non-edges."""
    edges = [
        (u, v)
        for u, v in itertools.combinations(range(g.n), 2)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Concatenate vertex blocks in order, with no edges between blocks."""
    offset = 0
    edges = []
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of a and b plus every edge between the two blocks."""
    edges = list(a.edges())
    edges.extend((u + a.n, v + a.n) for u, v in b.edges())
    edges.extend((u, v + a.n) for u in range(a.n) for v in range(b.n))
    return Graph(a.n + b.n, edges)


def complementary_prism(g: Graph) -> Graph:
    """g on vertices 0..n-1, its complement on n..2n-1, plus the matching i -- n+i."""
    n = g.n
    edges = list(g.edges())
    edges.extend(
        (u + n, v + n)
        for u, v in itertools.combinations(range(n), 2)
        if not g.has_edge(u, v)
    )
    edges.extend((i, i + n) for i in range(n))
    return Graph(2 * n, edges)


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Hop distances from source to every vertex; UNREACHABLE where no path."""
    g._check_vertex(source)
    dist: list[int | float] = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        rest = g.neighbor_mask(u)
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            if dist[v] == UNREACHABLE:
                dist[v] = du + 1
                queue.append(v)
    return dist


def components(g: Graph) -> list[VertexSet]:
    """Maximal connected pieces, ordered by their smallest vertex."""
    seen = 0
    out = []
    for start in range(g.n):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        queue = deque([start])
        while queue:
            u = queue.popleft()
            rest = g.neighbor_mask(u) & ~comp
            while rest:
                low = rest & -rest
                rest ^= low
                comp |= low
                queue.append(low.bit_length() - 1)
        seen |= comp
        out.append(VertexSet(g.n, comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def diameter(g: Graph) -> int | float:
    """Greatest pairwise distance; UNREACHABLE if disconnected, 0 for n <= 1."""
    if g.n <= 1:
        return 0
    best: int | float = 0
    for v in range(g.n):
        for d in bfs_distances(g, v):
            if d == UNREACHABLE:
                return UNREACHABLE
            if d > best:
                best = d
    return best


def simplicial_vertices(g: Graph) -> VertexSet:
    """Vertices whose closed neighborhood induces a clique.

    Isolated vertices qualify vacuously.
    """
    mask = 0
    for v in range(g.n):
        nv = g.neighbor_mask(v)
        rest = nv
        clique = True
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            rest ^= low
            # every other neighbor of v must be adjacent to u
            if nv & ~(g.neighbor_mask(u) | low):
                clique = False
                break
        if clique:
            mask |= 1 << v
    return VertexSet(g.n, mask)


def induced_subgraph(g: Graph, vertices: VertexSet) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph induced on the given vertices, relabeled to 0..k-1.

    Returns the subgraph and the ascending tuple of original labels, so that
    new vertex i corresponds to original vertex labels[i].
    """
    labels = tuple(vertices)
    index = {old: new for new, old in enumerate(labels)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in vertices and v in vertices
    ]
    return Graph(len(labels), edges), labels


def is_cograph(g: Graph) -> bool:
    """True iff no 4 vertices induce a path on 4 vertices.

    Exhaustive over 4-subsets; intended for desk-scale graphs only.
    """
    for quad in itertools.combinations(range(g.n), 4):
        degs = sorted(
            sum(1 for u in quad if u != v and g.has_edge(u, v)) for v in quad
        )
        # among 4-vertex graphs, degree sequence [1,1,2,2] pins down the path
        if degs == [1, 1, 2, 2]:
            return False
    return True


def is_tree(g: Graph) -> bool:
    """Connected with exactly n - 1 edges (single vertices count)."""
    return g.n >= 1 and g.m == g.n - 1 and is_connected(g)
