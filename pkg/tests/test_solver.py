import pytest
from hypothesis import given, settings

from prismhull import (
    CapExceededError,
    Graph,
    SearchConfig,
    UnsoundConstraintsError,
    VertexSet,
    all_pairs_distances,
    complement,
    complementary_prism,
    disjoint_union,
    forced_pairs_prism,
    forced_vertices,
    hull_number,
    hull_number_exact,
    hull_number_prism,
    is_hull_set,
    minimum_hull_sets,
)
from prismhull.families import FamilySpec, generate

from oracles import adjacency, graphs, ref_hull_number, ref_minimum_hull_sets


def fam(kind, n, seed=0):
    return generate(FamilySpec(kind, n, seed))


RAW = SearchConfig(pruning_enabled=False)


class TestForcedConstraints:
    def test_complete_graph_forces_everything(self):
        assert forced_vertices(fam("complete", 5)) == VertexSet.full(5)

    def test_star_prism_forces_the_isolated_partner(self):
        g = complementary_prism(fam("star", 3))
        assert forced_vertices(g) == VertexSet.of(8, [4])

    def test_cycle_forces_nothing(self):
        assert not forced_vertices(fam("cycle", 6))

    def test_pairs_star(self):
        assert forced_pairs_prism(fam("star", 3)) == [(1, 5), (2, 6), (3, 7)]

    def test_pairs_cycle_empty(self):
        assert forced_pairs_prism(fam("cycle", 5)) == []

    def test_pairs_triangle(self):
        assert forced_pairs_prism(fam("complete", 3)) == [(0, 3), (1, 4), (2, 5)]


class TestHullNumberExamples:
    def test_singleton(self):
        report = hull_number(Graph(1))
        assert report.hull_number == 1 and report.witness == VertexSet.of(1, [0])

    def test_empty_graph(self):
        report = hull_number(Graph(0))
        assert report.hull_number == 0 and report.witness == VertexSet(0)

    def test_path(self):
        report = hull_number(fam("path", 7))
        assert report.hull_number == 2
        assert report.witness == VertexSet.of(7, [0, 6])

    def test_square(self):
        assert hull_number(fam("cycle", 4)).hull_number == 2

    def test_two_edges_need_all_endpoints(self):
        g = disjoint_union([fam("complete", 2), fam("complete", 2)])
        report = hull_number(g)
        assert report.hull_number == 4 and report.witness == VertexSet.full(4)

    @pytest.mark.parametrize(
        "kind,n,expected",
        [
            ("complete", 4, 4),
            ("path", 3, 3),
            ("cycle", 6, 2),
            ("star", 3, 4),
            ("theorem9", 4, 4),
        ],
    )
    def test_prism_values(self, kind, n, expected):
        assert hull_number_prism(fam(kind, n)).hull_number == expected

    def test_prism_of_two_triangles(self):
        g = disjoint_union([fam("complete", 3), fam("complete", 3)])
        assert hull_number_prism(g).hull_number == 3


class TestReportContract:
    @pytest.mark.parametrize(
        "g",
        [
            fam("path", 6),
            fam("cycle", 5),
            fam("complete", 4),
            disjoint_union([fam("path", 3), fam("complete", 2)]),
            complementary_prism(fam("star", 3)),
        ],
    )
    def test_witness_is_a_hull_set_of_reported_size(self, g):
        report = hull_number(g)
        dm = all_pairs_distances(g)
        assert is_hull_set(g, dm, report.witness)
        assert len(report.witness) == report.hull_number
        assert report.forced.issubset(report.witness)

    def test_search_log_accounts_for_every_smaller_size(self):
        report = hull_number_prism(fam("star", 3))
        assert report.hull_number == 4
        by_size = {entry.size: entry for entry in report.search_log}
        for size in range(1, 4):
            assert by_size[size].outcome in ("exhausted", "skipped-lower-bound")
            if by_size[size].outcome == "exhausted":
                assert by_size[size].tested > 0
        assert by_size[4].outcome == "witness"
        assert report.sets_tested == sum(e.tested for e in report.search_log)

    def test_exhaustive_log_below_witness(self):
        report = hull_number(fam("cycle", 5))
        assert report.hull_number == 3
        entry = next(e for e in report.search_log if e.size == 2)
        assert entry.outcome == "exhausted" and entry.tested > 0

    def test_cap_refusal_names_the_cap(self):
        with pytest.raises(CapExceededError, match="cap is 4"):
            hull_number(fam("path", 5), SearchConfig(max_vertices=4))
        with pytest.raises(CapExceededError, match="prism has 10"):
            hull_number_prism(fam("path", 5), SearchConfig(max_vertices=9))

    def test_forced_universe_mismatch_refused(self):
        with pytest.raises(ValueError, match="forced"):
            hull_number_exact(fam("path", 4), forced=VertexSet.of(5, [0]))

    def test_pair_range_refused(self):
        from prismhull import VertexRangeError

        with pytest.raises(VertexRangeError):
            hull_number_exact(fam("path", 4), pairs=[(0, 9)])

    def test_config_validation(self):
        with pytest.raises(ValueError):
            SearchConfig(max_vertices=0)
        with pytest.raises(ValueError):
            SearchConfig(parallel_width=0)


class TestDeterminismAndParallelism:
    @pytest.mark.parametrize("width", [1, 2, 3, 5])
    def test_report_independent_of_worker_count(self, width):
        g = complementary_prism(fam("cycle", 5))
        base = hull_number(g, SearchConfig())
        wide = hull_number(g, SearchConfig(parallel_width=width))
        assert wide == base

    def test_repeated_runs_identical(self):
        g = fam("tree", 7, 3)
        assert hull_number_prism(g) == hull_number_prism(g)


class TestPruningSoundness:
    @pytest.mark.parametrize(
        "g",
        [
            fam("path", 5),
            fam("cycle", 6),
            fam("complete", 4),
            fam("star", 4),
            disjoint_union([fam("complete", 2), fam("path", 3)]),
            fam("theorem9", 3),
        ],
    )
    def test_pruned_equals_raw(self, g):
        assert hull_number(g).hull_number == hull_number(g, RAW).hull_number

    def test_prism_pruned_equals_raw(self):
        for kind, n in (("path", 4), ("star", 3), ("complete", 3)):
            g = fam(kind, n)
            assert (
                hull_number_prism(g).hull_number
                == hull_number_prism(g, RAW).hull_number
            )

    @given(graphs(max_n=6))
    @settings(max_examples=60, deadline=None)
    def test_matches_reference_search(self, g):
        assert hull_number(g).hull_number == ref_hull_number(adjacency(g))

    def test_unsound_constraints_detected(self):
        cfg = SearchConfig(verify_unconstrained=True)
        # forcing an interior path vertex inflates the answer from 2 to 3
        with pytest.raises(UnsoundConstraintsError):
            hull_number_exact(fam("path", 4), cfg, forced=VertexSet.of(4, [1]))

    def test_sound_constraints_pass_the_recheck(self):
        cfg = SearchConfig(verify_unconstrained=True)
        report = hull_number_exact(
            fam("complete", 4), cfg, forced=forced_vertices(fam("complete", 4))
        )
        assert report.hull_number == 4


class TestAdditivity:
    @given(graphs(max_n=4), graphs(max_n=4))
    @settings(max_examples=40, deadline=None)
    def test_hull_number_adds_over_components(self, a, b):
        g = disjoint_union([a, b])
        assert (
            hull_number(g).hull_number
            == hull_number(a).hull_number + hull_number(b).hull_number
        )


class TestMinimumHullSets:
    def test_path_has_unique_minimum(self):
        assert minimum_hull_sets(fam("path", 4)) == [VertexSet.of(4, [0, 3])]

    @given(graphs(max_n=5))
    @settings(max_examples=40, deadline=None)
    def test_matches_reference_enumeration(self, g):
        ours = [set(s) for s in minimum_hull_sets(g)]
        assert ours == ref_minimum_hull_sets(adjacency(g))

    def test_prism_isomorphism_invariance(self):
        # swapping a graph with its complement leaves the prism hull number alone
        for kind, n in (("path", 4), ("cycle", 5), ("star", 3)):
            g = fam(kind, n)
            assert (
                hull_number_prism(g).hull_number
                == hull_number_prism(complement(g)).hull_number
            )

    @given(graphs(max_n=5))
    @settings(max_examples=40, deadline=None)
    def test_prism_isomorphism_invariance_everywhere(self, g):
        assert (
            hull_number_prism(g).hull_number
            == hull_number_prism(complement(g)).hull_number
        )
