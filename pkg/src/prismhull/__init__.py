"""Geodetic convexity on finite simple graphs.

Closed intervals, the iterated interval operator, convex hulls, exact
minimum hull sets, and a verified catalog of hull-number values and bounds
for complementary prisms.
"""

from .convexity import (
    DistanceMatrix,
    HullTrace,
    all_pairs_distances,
    convex_hull,
    interval_pair,
    interval_set,
    is_convex,
    is_hull_set,
)
from .edgelist import format_edgelist, parse_edgelist, read_edgelist, write_edgelist
from .errors import (
    CapExceededError,
    ParseError,
    PrismHullError,
    UnsoundConstraintsError,
    VertexRangeError,
)
from .families import FamilySpec, generate, graph_from_dsl
from .graphs import (
    UNREACHABLE,
    Graph,
    VertexSet,
    complement,
    complementary_prism,
    components,
    diameter,
    disjoint_union,
    induced_subgraph,
    is_cograph,
    is_connected,
    is_tree,
    join,
    simplicial_vertices,
)
from .solver import (
    HullReport,
    SearchConfig,
    SizeLog,
    forced_pairs_prism,
    forced_vertices,
    hull_number,
    hull_number_exact,
    hull_number_prism,
    minimum_hull_sets,
)
from .verify import (
    CATALOG_IDS,
    TheoremCheck,
    check_cographs,
    check_disconnected,
    check_duarte,
    check_lemmas,
    check_trees,
    check_unbounded,
    default_suite,
    format_report,
    lemma_corpus,
)

__version__ = "0.1.0"
