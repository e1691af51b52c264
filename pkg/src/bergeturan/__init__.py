"""Verification and search toolkit for Turan-type problems on Berge hypergraphs.

Builds the extremal configurations, decides Berge-subhypergraph containment
with certificates, evaluates the exact Turan formulas, verifies the
supporting binomial inequalities in exact rational arithmetic, and computes
exact Turan numbers for small instances by exhaustive branch and bound.
"""

__version__ = "0.1.0"

from .berge import (
    BergeCertificate,
    EmbeddingResult,
    GoodOrder,
    PathSearchResult,
    StarResult,
    Status,
    berge_common_neighbours,
    berge_star_exists,
    find_berge_cycle,
    find_berge_embedding,
    good_order,
    longest_berge_path,
    verify_certificate,
)
from .constructions import (
    AuditReport,
    ConstructionLayout,
    block_construction,
    construction_audit,
    extremal_construction,
)
from .core import (
    FormulaParams,
    Hypergraph,
    PatternGraph,
    cycle_pattern,
    disjoint_paths_pattern,
    make_hypergraph,
    matching_pattern,
    parse_pattern,
    path_pattern,
    read_hypergraph,
    star_pattern,
    union_pattern,
    write_hypergraph,
)
from .engine import backend_name, compiled_available
from .formulas import (
    ConjectureReport,
    LemmaReport,
    berge_kpl_turan,
    berge_path_bound,
    conjecture_values,
    connected_berge_path_turan,
    default_grid,
    erdos_gallai_bound,
    kpl_graph_turan,
    two_path_turan,
    verify_lemma,
)
from .search import (
    ComparisonReport,
    SearchOptions,
    SearchResult,
    compare_with_formula,
    exact_turan,
    is_maximal_free,
)
