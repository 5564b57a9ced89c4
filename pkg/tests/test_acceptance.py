"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v` (add -s to see the summary
lines). The corpus-driven criteria share one 200-graph corpus built from
every generator family plus seeded random graphs, all on at most 8 vertices.
"""

import random
import time
from collections import Counter

import pytest

from prismhull import (
    SearchConfig,
    VertexSet,
    all_pairs_distances,
    components,
    convex_hull,
    hull_number,
    hull_number_prism,
    interval_set,
    is_convex,
    lemma_corpus,
)
from prismhull.families import FamilySpec, generate
from prismhull.verify import (
    check_cographs,
    check_disconnected,
    check_duarte,
    check_lemmas,
    check_trees,
    check_unbounded,
    failures,
    _cograph_instances,
    _union_spec,
    _BOUND_INSTANCES,
    _T4_INSTANCES,
    _TREE_INSTANCES,
)

RAW = SearchConfig(pruning_enabled=False)


@pytest.fixture(scope="module")
def corpus():
    graphs = lemma_corpus(200)
    assert len(graphs) == 200 and all(g.n <= 8 for g in graphs)
    return graphs


def report_line(criterion, message):
    print(f"[criterion {criterion:2d}] PASS: {message}")


def test_criterion_01_duarte_exact_values():
    started = time.monotonic()
    checks = check_duarte(range(2, 10))
    rows = {(c.theorem_id, c.instance): c for c in checks}
    for n in range(2, 9):
        c = rows[("T2.1", f"prism(complete:{n})")]
        assert c.expected == f"h={n}" and c.verdict == "pass"
    for n in range(3, 10):
        c = rows[("T2.2", f"prism(path:{n})")]
        assert c.expected == ("h=3" if n == 3 else "h=2") and c.verdict == "pass"
    for n in range(3, 10):
        c = rows[("T2.3", f"prism(cycle:{n})")]
        assert c.expected == ("h=2" if n >= 6 else "h=3") and c.verdict == "pass"
    elapsed = time.monotonic() - started
    assert elapsed < 120
    report_line(1, f"22 exact prism values for cliques, paths, cycles ({elapsed:.1f}s)")


def test_criterion_02_tree_values():
    stars = tuple(FamilySpec("star", n) for n in range(3, 8))
    checks = check_trees(stars + _TREE_INSTANCES)
    assert len(checks) == 15 and not failures(checks)
    for check, n in zip(checks[:5], range(3, 8)):
        assert check.expected == f"h={n + 1}" and check.verdict == "pass"
    tree_checks = checks[5:]
    assert len(tree_checks) == 10
    for check in tree_checks:
        assert check.expected == "h=2" and check.verdict == "pass"
    sizes = {spec.n for spec in _TREE_INSTANCES}
    assert sizes == {5, 6, 7, 8, 9}
    report_line(2, "star prisms give n+1, ten seeded non-star trees give 2")


def test_criterion_03_disconnected_exact_values():
    checks = check_disconnected([_union_spec(parts) for parts in _T4_INSTANCES])
    assert len(checks) == 8 and not failures(checks)
    shapes = set()
    for parts, check in zip(_T4_INSTANCES, checks):
        g = generate(_union_spec(parts))
        comps = components(g)
        nontrivial = sum(1 for c in comps if len(c) > 1)
        trivial = len(comps) - nontrivial
        sizes = sorted(len(c) for c in comps if len(c) > 1)
        assert nontrivial in (2, 3) and trivial in (0, 1, 2)
        assert all(2 <= s <= 4 for s in sizes)
        # the hull number counts every component, trivial ones included
        assert check.theorem_id == "T4"
        assert check.expected == f"h={len(comps) + 1}"
        assert check.verdict == "pass"
        shapes.add((nontrivial, trivial))
    assert {k for k, _ in shapes} == {2, 3}
    assert {t for _, t in shapes} == {0, 1, 2}
    report_line(3, "8 multi-component unions hit (component count)+1 exactly")


def test_criterion_04_long_path_plus_isolated_vertices():
    for t in (1, 2):
        parts = ("path:5",) + ("complete:1",) * t
        checks = check_disconnected([_union_spec(parts)])
        c1 = next(c for c in checks if c.theorem_id == "C1")
        assert c1.expected == f"h={t + 2}" and c1.verdict == "pass"
    report_line(4, "prism(P5 + t isolated vertices) = t+2 for t in {1,2}")


def test_criterion_05_bound_theorems_with_slack():
    checks = check_disconnected([_union_spec(p) for p in _BOUND_INSTANCES])
    cograph_checks = check_cographs(_cograph_instances())
    bound_ids = ("T5", "T6a", "T6b", "T7", "C2", "T8ii")
    bound_rows = [
        c for c in checks + cograph_checks if c.theorem_id in bound_ids
    ]
    instances = {c.instance for c in bound_rows}
    assert len(instances) >= 12
    counts = Counter(c.theorem_id for c in bound_rows)
    for tid in bound_ids:
        assert counts[tid] >= 3, tid
    for c in bound_rows:
        assert c.verdict == "pass", c.line()
        assert c.slack is not None and c.slack >= 0, c.line()
    report_line(
        5,
        f"{len(bound_rows)} bound checks on {len(instances)} instances, "
        "all inequalities hold with nonnegative slack",
    )


def test_criterion_06_cograph_exact_values():
    checks = check_cographs(_cograph_instances())
    t8i = [c for c in checks if c.theorem_id == "T8i"]
    assert [c.expected for c in t8i] == [f"h={t}" for t in range(2, 7)]
    assert all(c.verdict == "pass" for c in t8i)
    t8iii = [c for c in checks if c.theorem_id == "T8iii"]
    assert len(t8iii) == 5
    assert all(c.verdict == "pass" for c in t8iii)
    # expected values were recomputed from the complement's components
    assert [c.expected for c in t8iii] == ["h=3", "h=3", "h=4", "h=4", "h=5"]
    report_line(6, "complete-graph prisms give t; 5 dense cographs give k+t+1")


def test_criterion_07_unbounded_family():
    checks = check_unbounded(range(2, 6))
    assert len(checks) == 4 and not failures(checks)
    started = time.monotonic()
    top = check_unbounded([6])
    elapsed = time.monotonic() - started
    assert top[0].expected == "h=6" and top[0].verdict == "pass"
    assert elapsed < 300
    report_line(7, f"pendant-clique prisms realize h = 2..6 (n=6 in {elapsed:.1f}s)")


def test_criterion_08_lemma_oracles_on_corpus(corpus):
    checks = check_lemmas(corpus)
    l1 = [c for c in checks if c.theorem_id == "L1"]
    l2 = [c for c in checks if c.theorem_id == "L2"]
    assert len(l1) == 200
    assert len(l2) == sum(1 for g in corpus if g.n <= 6)
    assert not failures(checks)
    assert all(c.verdict == "pass" for c in checks)
    report_line(
        8,
        f"all minimum hull sets on {len(l1)} graphs contain the simplicial "
        f"vertices; {len(l2)} prisms hit every matched pair",
    )


def test_criterion_09_hull_operator_properties(corpus):
    rng = random.Random(987123)

    def random_subset(n, bound=None):
        members = [v for v in range(n) if rng.random() < 0.4]
        if bound is not None:
            members = [v for v in members if v in bound]
        return VertexSet.of(n, members)

    matrices = {id(g): all_pairs_distances(g) for g in corpus}

    # monotonicity on 500 seeded nested pairs, extensivity along the way
    for _ in range(500):
        g = corpus[rng.randrange(len(corpus))]
        if g.n == 0:
            continue
        dm = matrices[id(g)]
        t = random_subset(g.n)
        s = random_subset(g.n, bound=t)
        it, is_ = interval_set(g, dm, t), interval_set(g, dm, s)
        assert t.issubset(it) and s.issubset(is_)
        assert is_.issubset(it)

    # fixpoint idempotence and intersection closure on 200 seeded hull pairs
    for _ in range(200):
        g = corpus[rng.randrange(len(corpus))]
        if g.n == 0:
            continue
        dm = matrices[id(g)]
        a = convex_hull(g, dm, random_subset(g.n)).final
        b = convex_hull(g, dm, random_subset(g.n)).final
        assert interval_set(g, dm, a) == a and interval_set(g, dm, b) == b
        assert is_convex(g, dm, a & b)

    # the iterated hull equals the smallest convex superset, for every seed set
    for g in corpus:
        dm = matrices[id(g)]
        convex_masks = [
            bits for bits in range(1 << g.n)
            if is_convex(g, dm, VertexSet(g.n, bits))
        ]
        for bits in range(1 << g.n):
            oracle = (1 << g.n) - 1
            for c in convex_masks:
                if bits & ~c == 0:
                    oracle &= c
            hull = convex_hull(g, dm, VertexSet(g.n, bits)).final
            assert hull.mask == oracle
    report_line(
        9,
        "extensivity, monotonicity (500 pairs), idempotence, intersection "
        "closure (200 pairs), and the smallest-convex-superset oracle all hold",
    )


def test_criterion_10_pruning_soundness(corpus):
    for g in corpus:
        pruned = hull_number(g).hull_number
        raw = hull_number(g, RAW).hull_number
        assert pruned == raw, f"pruning changed the answer on {g!r}"
    small = [g for g in corpus if g.n <= 4]
    assert small
    for g in small:
        pruned = hull_number_prism(g).hull_number
        raw = hull_number_prism(g, RAW).hull_number
        assert pruned == raw, f"prism pruning changed the answer on {g!r}"
    report_line(
        10,
        f"constrained and brute-force searches agree on all 200 graphs "
        f"and on {len(small)} prisms",
    )
