"""Exact minimum hull sets by cardinality-ascending exhaustive search.

Candidate sets are enumerated in ascending size and, within a size, in
lexicographic order of their non-forced vertices, so the first hull set found
is a minimum one and the reported witness is deterministic.

The search accepts two kinds of sound constraints: a set of vertices every
hull set must contain (the simplicial vertices) and vertex pairs from which
every hull set must pick at least one element (matched simplicial pairs of a
complementary prism). Constraints only skip candidates that provably cannot
be hull sets, so they never change which set is found first; a debug flag
re-solves small instances unconstrained to detect unsound caller-supplied
constraints.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import CapExceededError, UnsoundConstraintsError, VertexRangeError
from .graphs import (
    UNREACHABLE,
    Graph,
    VertexSet,
    bfs_distances,
    complement,
    complementary_prism,
    components,
    induced_subgraph,
    simplicial_vertices,
)

_CHUNK = 2048


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exact search.

    pruning_enabled=False turns the solver into a raw brute-force oracle:
    no constraints, no lower-bound seeding, no component decomposition.
    """

    max_vertices: int = 24
    parallel_width: int = 1
    pruning_enabled: bool = True
    verify_unconstrained: bool = False

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError(f"max_vertices must be >= 1, got {self.max_vertices}")
        if self.parallel_width < 1:
            raise ValueError(f"parallel_width must be >= 1, got {self.parallel_width}")


@dataclass(frozen=True)
class SizeLog:
    """What the search did at one candidate cardinality."""

    size: int
    tested: int
    outcome: str  # "skipped-lower-bound" | "exhausted" | "witness"


@dataclass(frozen=True)
class HullReport:
    hull_number: int
    witness: VertexSet
    forced: VertexSet
    pairs: tuple[tuple[int, int], ...]
    sets_tested: int
    search_log: tuple[SizeLog, ...]


def forced_vertices(g: Graph) -> VertexSet:
    """Vertices that belong to every hull set of g: the simplicial ones."""
    return simplicial_vertices(g)


def forced_pairs_prism(g: Graph) -> list[tuple[int, int]]:
    """Matched pairs (i, n+i) of the prism of g that every hull set must hit.

    A pair qualifies when vertex i is simplicial in g and its partner is
    simplicial in the complement of g.
    """
    in_g = simplicial_vertices(g)
    in_comp = simplicial_vertices(complement(g))
    return [(i, g.n + i) for i in range(g.n) if i in in_g and i in in_comp]


@lru_cache(maxsize=4096)
def _interval_masks(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Bitmask of the closed interval of every vertex pair, precomputed once."""
    n = g.n
    dist = [bfs_distances(g, v) for v in range(n)]
    table = [[0] * n for _ in range(n)]
    for u in range(n):
        du = dist[u]
        table[u][u] = 1 << u
        for v in range(u + 1, n):
            duv = du[v]
            if duv == UNREACHABLE:
                mask = (1 << u) | (1 << v)
            else:
                dv = dist[v]
                mask = 0
                for w in range(n):
                    if du[w] + dv[w] == duv:
                        mask |= 1 << w
            table[u][v] = mask
            table[v][u] = mask
    return tuple(tuple(row) for row in table)


def _hull_fills(table, start: int, full: int) -> bool:
    """Whether iterating the interval operator from start reaches full."""
    cur = start
    if cur == full:
        return True
    new = cur
    while new:
        add = 0
        nm = new
        while nm:
            low = nm & -nm
            nm ^= low
            row = table[low.bit_length() - 1]
            cm = cur
            while cm:
                lv = cm & -cm
                cm ^= lv
                add |= row[lv.bit_length() - 1]
        add &= ~cur
        if not add:
            return False
        cur |= add
        if cur == full:
            return True
        new = add
    return False


def hull_number_exact(
    g: Graph,
    cfg: SearchConfig | None = None,
    forced: VertexSet | None = None,
    pairs: tuple[tuple[int, int], ...] | list[tuple[int, int]] = (),
) -> HullReport:
    """Minimum hull set of g under caller-supplied sound constraints.

    Soundness of the constraints is the caller's responsibility; pass no
    constraints for unconditional correctness.
    """
    cfg = cfg or SearchConfig()
    n = g.n
    if n > cfg.max_vertices:
        raise CapExceededError(
            f"graph has {n} vertices; search cap is {cfg.max_vertices}"
        )
    if forced is None:
        forced = VertexSet(n)
    elif forced.n != n:
        raise ValueError(f"forced set is over {forced.n} vertices, graph has {n}")
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise VertexRangeError(f"pair ({a},{b}) outside vertex range [0, {n})")
        if a == b:
            raise ValueError(f"degenerate pair ({a},{b})")

    table = _interval_masks(g)
    full = (1 << n) - 1
    forced_mask = forced.mask
    forced_count = forced_mask.bit_count()
    pair_masks = tuple((1 << a) | (1 << b) for a, b in pairs)
    free = [v for v in range(n) if not (forced_mask >> v) & 1]

    if cfg.pruning_enabled:
        # every pair disjoint from the forced set costs one extra pick
        extra = sum(1 for pm in pair_masks if pm & forced_mask == 0)
        start = max(forced_count + extra, min(n, 2))
    else:
        start = forced_count

    log = []
    total_tested = 0
    for size in range(forced_count, start):
        log.append(SizeLog(size, 0, "skipped-lower-bound"))
    for size in range(start, n + 1):
        found, tested = _scan_size(
            table, full, forced_mask, free, size - forced_count,
            pair_masks, cfg.parallel_width,
        )
        total_tested += tested
        if found is None:
            log.append(SizeLog(size, tested, "exhausted"))
            continue
        log.append(SizeLog(size, tested, "witness"))
        if cfg.verify_unconstrained and n <= 8 and (forced_mask or pair_masks):
            raw_cfg = replace(cfg, pruning_enabled=False, verify_unconstrained=False)
            raw = hull_number_exact(g, raw_cfg)
            if raw.hull_number != size:
                raise UnsoundConstraintsError(
                    f"constrained search found size {size}, "
                    f"exhaustive search found {raw.hull_number}"
                )
        return HullReport(
            hull_number=size,
            witness=VertexSet(n, found),
            forced=forced,
            pairs=tuple(pairs),
            sets_tested=total_tested,
            search_log=tuple(log),
        )
    raise AssertionError("the full vertex set is always a hull set")


def _scan_size(table, full, forced_mask, free, need, pair_masks, width):
    """First hull set of one cardinality, plus how many candidates were tested.

    Candidates failing a pair constraint are skipped without being tested.
    The tested count always reflects enumeration order up to and including
    the witness, whatever the worker width.
    """
    combos = itertools.combinations(free, need)
    if width <= 1:
        tested = 0
        for combo in combos:
            cand = forced_mask
            for v in combo:
                cand |= 1 << v
            if pair_masks and any(cand & pm == 0 for pm in pair_masks):
                continue
            tested += 1
            if _hull_fills(table, cand, full):
                return cand, tested
        return None, tested

    def build_chunk():
        block = list(itertools.islice(combos, _CHUNK))
        if not block:
            return None
        masks = []
        for combo in block:
            cand = forced_mask
            for v in combo:
                cand |= 1 << v
            if pair_masks and any(cand & pm == 0 for pm in pair_masks):
                continue
            masks.append(cand)
        return masks

    def eval_chunk(masks):
        tested = 0
        for cand in masks:
            tested += 1
            if _hull_fills(table, cand, full):
                return cand, tested
        return None, tested

    # Workers evaluate disjoint contiguous enumeration ranges; results are
    # consumed strictly in range order, so the earliest-range hit wins and
    # the outcome is independent of the worker count.
    total_tested = 0
    with ThreadPoolExecutor(max_workers=width) as pool:
        window: deque = deque()
        exhausted = False
        while True:
            while not exhausted and len(window) < 2 * width:
                block = build_chunk()
                if block is None:
                    exhausted = True
                    break
                window.append(pool.submit(eval_chunk, block))
            if not window:
                return None, total_tested
            cand, tested = window.popleft().result()
            total_tested += tested
            if cand is not None:
                for fut in window:
                    fut.cancel()
                return cand, total_tested


def hull_number(g: Graph, cfg: SearchConfig | None = None) -> HullReport:
    """Minimum hull set of an arbitrary graph.

    With pruning on, solves each connected component separately (hull numbers
    add over components because no shortest path crosses components) and
    forces the simplicial vertices of each. With pruning off, runs the raw
    whole-graph search.
    """
    cfg = cfg or SearchConfig()
    if g.n > cfg.max_vertices:
        raise CapExceededError(
            f"graph has {g.n} vertices; search cap is {cfg.max_vertices}"
        )
    if not cfg.pruning_enabled:
        return hull_number_exact(g, cfg)
    comps = components(g)
    if len(comps) <= 1:
        return hull_number_exact(g, cfg, forced=forced_vertices(g))
    witness_mask = 0
    forced_mask = 0
    total = 0
    tested = 0
    logs = []
    for comp in comps:
        sub, labels = induced_subgraph(g, comp)
        rep = hull_number_exact(sub, cfg, forced=forced_vertices(sub))
        total += rep.hull_number
        tested += rep.sets_tested
        logs.extend(rep.search_log)
        for v in rep.witness:
            witness_mask |= 1 << labels[v]
        for v in rep.forced:
            forced_mask |= 1 << labels[v]
    return HullReport(
        hull_number=total,
        witness=VertexSet(g.n, witness_mask),
        forced=VertexSet(g.n, forced_mask),
        pairs=(),
        sets_tested=tested,
        search_log=tuple(logs),
    )


def hull_number_prism(g: Graph, cfg: SearchConfig | None = None) -> HullReport:
    """Minimum hull set of the complementary prism of g.

    Applies both prism-specific constraints: simplicial vertices of the prism
    are forced, and each matched simplicial pair must be hit.
    """
    cfg = cfg or SearchConfig()
    prism = complementary_prism(g)
    if prism.n > cfg.max_vertices:
        raise CapExceededError(
            f"prism has {prism.n} vertices; search cap is {cfg.max_vertices}"
        )
    if not cfg.pruning_enabled:
        return hull_number_exact(prism, cfg)
    return hull_number_exact(
        prism, cfg, forced=forced_vertices(prism), pairs=forced_pairs_prism(g)
    )


def minimum_hull_sets(g: Graph, cfg: SearchConfig | None = None) -> list[VertexSet]:
    """Every minimum hull set of g, by unconstrained enumeration.

    The minimum size comes from the solver; membership is then decided for
    all subsets of that size with no constraint filtering, so the list is
    exhaustive. Intended for small graphs.
    """
    cfg = cfg or SearchConfig()
    h = hull_number(g, cfg).hull_number
    table = _interval_masks(g)
    full = (1 << g.n) - 1
    out = []
    for combo in itertools.combinations(range(g.n), h):
        mask = 0
        for v in combo:
            mask |= 1 << v
        if _hull_fills(table, mask, full):
            out.append(VertexSet(g.n, mask))
    return out
