"""Numerical semigroup toolkit.

Core objects: numerical semigroups as finite membership windows
(nsg.semigroup), their Wilf-conjecture invariants (nsg.wilf), h-fold
sumsets and B_h sets (nsg.sumsets), near-miss construction families
(nsg.constructions), and exhaustive exploration of the semigroup tree by
genus (nsg.explorer), with a compiled kernel when available and a
pure-Python fallback.
"""
from .semigroup import (
    AperyTable,
    GeneratorSpec,
    NumericalSemigroup,
    from_generators,
    parse_label,
    parse_semigroup_input,
)
from .wilf import (
    WilfReport,
    check_count_formulas,
    q_rho,
    slice_profile,
    w0_number,
    wilf_number,
    wilf_report,
)
from .sumsets import (
    IntSet,
    geometric_bh_family,
    greedy_bh,
    h_fold_sumset,
    induces_bh_mod,
    is_bh,
    pairwise_distinct_union,
)
from .constructions import (
    ConstructionResult,
    PredictedProfile,
    construct_bh,
    construct_consecutive,
    construct_pair,
    construct_translated,
    explicit_family,
    verify_construction,
)
from .node import ExplorationNode
from .explorer import (
    HuntRecord,
    MinimaEntry,
    census,
    hunt_near_misses,
    iter_semigroups,
    scan_conjecture_bound,
    scan_conjecture_minima,
)
from .errors import (
    HypothesisViolation,
    InvalidSpecError,
    NonCofiniteError,
    NsgError,
    SearchLimitExceeded,
)

__version__ = "0.1.0"
