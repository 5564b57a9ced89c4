"""Plain-text edge lists.

Format: an optional run of '#' comment lines anywhere, a header line "n m",
then exactly m lines "u v" with 0 <= u < v < n, whitespace-separated.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graphs import Graph


def parse_edgelist(text: str) -> Graph:
    lines = [
        line
        for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty edge list: missing 'n m' header")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"bad header {lines[0].strip()!r}: expected 'n m'")
    n, m = (_non_negative_int(tok, "header") for tok in header)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header claims {m} edges, found {len(body)} edge lines")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {line.strip()!r}: expected 'u v'")
        u, v = (_non_negative_int(tok, "edge") for tok in parts)
        if not u < v:
            raise ParseError(f"edge {u} {v}: endpoints must satisfy u < v")
        if v >= n:
            raise ParseError(f"edge {u} {v}: endpoint {v} outside range [0, {n})")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        dup = next(e for e in edges if edges.count(e) > 1)
        raise ParseError(f"duplicate edge {dup[0]} {dup[1]}")
    return Graph(n, edges)


def _non_negative_int(token: str, where: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"bad {where} token {token!r}: expected an integer") from None
    if value < 0:
        raise ParseError(f"bad {where} token {token!r}: must be non-negative")
    return value


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def read_edgelist(path: str | Path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edgelist(g))
