"""Deterministic generators for the graph families used across the package.

Each family is named by a FamilySpec; the same spec (seed included) always
produces the identical labeled graph. A small text DSL names family instances
on the command line, e.g. "path:5", "tree:8:seed=7",
"union(complete:3,path:1,path:1)", or "prism(cycle:6)".
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field

from .errors import ParseError
from .graphs import Graph, complementary_prism, disjoint_union, join

FAMILY_KINDS = (
    "path",
    "cycle",
    "complete",
    "star",
    "tree",
    "disconnected",
    "cograph",
    "theorem9",
)


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic description of one generated graph family instance."""

    kind: str
    n: int = 0
    seed: int = 0
    parts: tuple["FamilySpec", ...] = field(default=())

    def to_dsl(self) -> str:
        if self.kind == "disconnected":
            return "union(" + ",".join(p.to_dsl() for p in self.parts) + ")"
        if self.kind in ("tree", "cograph"):
            return f"{self.kind}:{self.n}:seed={self.seed}"
        return f"{self.kind}:{self.n}"


def generate(spec: FamilySpec) -> Graph:
    """Build the graph a FamilySpec describes.

    Parameter-domain violations raise ValueError naming the parameter.
    """
    kind, n = spec.kind, spec.n
    if kind == "path":
        _require(n >= 1, f"path size n must be >= 1, got {n}")
        return Graph(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "cycle":
        _require(n >= 3, f"cycle size n must be >= 3, got {n}")
        return Graph(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        _require(n >= 1, f"complete size n must be >= 1, got {n}")
        return Graph(n, itertools.combinations(range(n), 2))
    if kind == "star":
        _require(n >= 1, f"star leaf count n must be >= 1, got {n}")
        return Graph(n + 1, [(0, i) for i in range(1, n + 1)])
    if kind == "tree":
        _require(n >= 1, f"tree size n must be >= 1, got {n}")
        return _random_tree(n, spec.seed)
    if kind == "cograph":
        _require(n >= 1, f"cograph size n must be >= 1, got {n}")
        return _random_cograph(n, spec.seed)
    if kind == "disconnected":
        _require(len(spec.parts) > 0, "disconnected spec needs at least one part")
        return disjoint_union([generate(p) for p in spec.parts])
    if kind == "theorem9":
        _require(n >= 2, f"theorem9 size n must be >= 2, got {n}")
        edges = list(itertools.combinations(range(n), 2))
        edges += [(0, n), (1, n + 1)]
        return Graph(n + 2, edges)
    raise ValueError(f"unknown family kind {kind!r}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _random_tree(n: int, seed: int) -> Graph:
    """Labeled tree decoded from a seeded uniform Pruefer sequence."""
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, [(0, 1)])
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges)


# Cotree node sampling: stop at a leaf with probability 0.5, otherwise branch
# into a disjoint union or a join (0.25 each). Trees are resampled until the
# leaf count hits the requested size, so the same seed replays to the same
# accepted tree.
_LEAF = "leaf"


def _sample_cotree(rng: random.Random, depth: int):
    if depth == 0:
        return _LEAF
    roll = rng.random()
    if roll < 0.5:
        return _LEAF
    op = "union" if roll < 0.75 else "join"
    return (op, _sample_cotree(rng, depth - 1), _sample_cotree(rng, depth - 1))


def _cotree_leaves(node) -> int:
    if node is _LEAF:
        return 1
    return _cotree_leaves(node[1]) + _cotree_leaves(node[2])


def _cotree_graph(node) -> Graph:
    if node is _LEAF:
        return Graph(1)
    op, left, right = node
    a, b = _cotree_graph(left), _cotree_graph(right)
    return disjoint_union([a, b]) if op == "union" else join(a, b)


def _random_cograph(n: int, seed: int) -> Graph:
    rng = random.Random(seed)
    depth = max(3, n.bit_length() + 2)
    for _ in range(100_000):
        node = _sample_cotree(rng, depth)
        if _cotree_leaves(node) == n:
            return _cotree_graph(node)
    raise ValueError(f"cograph sampling did not reach size {n}")


# ---------------------------------------------------------------------------
# Text DSL


def graph_from_dsl(text: str, default_seed: int = 0) -> Graph:
    """Evaluate a family DSL string to a graph.

    Grammar: prism(EXPR) | union(EXPR, EXPR, ...) | KIND:N[:seed=S].
    Leaves without an explicit seed use default_seed.
    """
    parser = _DslParser(text, default_seed)
    g = parser.expr()
    parser.expect_end()
    return g


class _DslParser:
    def __init__(self, text: str, default_seed: int = 0):
        self.text = text
        self.pos = 0
        self.default_seed = default_seed

    def fail(self, message: str) -> ParseError:
        return ParseError(f"bad family spec {self.text!r}: {message}")

    def skip_space(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def expr(self) -> Graph:
        self.skip_space()
        if self._take("prism("):
            inner = self.expr()
            self._expect(")")
            return complementary_prism(inner)
        if self._take("union("):
            parts = [self.expr()]
            while self._take(","):
                parts.append(self.expr())
            self._expect(")")
            return disjoint_union(parts)
        return self._leaf()

    def _leaf(self) -> Graph:
        token = self._word()
        if token not in FAMILY_KINDS or token == "disconnected":
            raise self.fail(f"unknown family kind {token!r}")
        self._expect(":")
        n = self._int()
        seed = self.default_seed
        save = self.pos
        if self._take(":"):
            if not self._take("seed="):
                self.pos = save
                raise self.fail("expected 'seed=' after second ':'")
            seed = self._int()
        try:
            return generate(FamilySpec(token, n, seed))
        except ValueError as exc:
            raise self.fail(str(exc)) from exc

    def _word(self) -> str:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalnum():
            self.pos += 1
        if self.pos == start:
            raise self.fail(f"expected a family kind at position {start}")
        return self.text[start:self.pos]

    def _int(self) -> int:
        self.skip_space()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.fail(f"expected an integer at position {start}")
        return int(self.text[start:self.pos])

    def _take(self, literal: str) -> bool:
        self.skip_space()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def _expect(self, literal: str) -> None:
        if not self._take(literal):
            raise self.fail(f"expected {literal!r} at position {self.pos}")

    def expect_end(self) -> None:
        self.skip_space()
        if self.pos != len(self.text):
            raise self.fail(f"trailing input at position {self.pos}")
