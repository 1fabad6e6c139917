"""Exact tournament invariants built on backedge graphs.

The ordering clique number of a tournament is the minimum over all vertex
orderings of the clique number of the backedge graph; it sits between the
domination number and the dichromatic number.  This package computes those
invariants exactly at desk scale, builds the recursive tournament families
they are studied on, recognizes heroes, searches for structured orderings,
enumerates small tournaments up to isomorphism, and re-verifies the
published desk-scale claims.
"""

from .canon import are_isomorphic, automorphism_count, canonical_code
from .codec import (
    load,
    dump,
    parse_digraph,
    parse_tournament,
    serialize_digraph,
    serialize_tournament,
    to_dot,
)
from .construct import (
    TT,
    Arrow,
    C3,
    Delta,
    Raw,
    Reverse,
    Rot,
    S,
    STilde,
    Subst,
    TP,
    build,
    parse_expr,
)
from .core import (
    BackedgeGraph,
    Digraph,
    Graph,
    Ordering,
    Tournament,
    backedge_graph,
    reverse,
    reverse_ordering,
    strong_components,
    tournament_from_backedge,
)
from .invariants import (
    Dicolouring,
    InvariantResult,
    chi_ordering_from_dicolouring,
    chromatic_number,
    check_dicolouring,
    clique_number,
    clique_number_oracle,
    decreasing_path_colouring,
    dichromatic_number,
    domination_number,
    greedy_dominating,
    independence_number,
    max_clique,
    max_transitive,
    ordering_optimize,
    ramsey,
)
from .search import (
    CriticalityReport,
    enumerate_tournaments,
    find_omega_critical,
    min_subtournament_with_omega,
    predicate_scan,
    random_tournament,
)
from .structure import (
    HeroArrow,
    HeroDelta,
    HeroLeaf,
    OrderingPredicate,
    bst_omega_probe,
    bst_ordering,
    cyclic_tripartitions,
    forest_to_tree,
    hero_family,
    is_gentleman,
    is_hero,
    ordering_search,
    star_forest_ordering,
    substitution_dicolouring,
    tp_matching_ordering,
)

__version__ = "0.1.0"
