"""Colexsegment ideals, Betti tables, and desk-scale verification campaigns
for squarefree monomial ideals in an exterior algebra."""

from .betti import (
    BettiTable,
    ComparisonVerdict,
    compare_betti,
    max_index_domination,
    stable_betti_table,
    tables_agree,
)
from .cartan import (
    CartanBasisElement,
    CartanTables,
    cartan_betti,
    chain_space,
    differential,
    exact_rank,
    rank_mod_p,
)
from .colex import (
    ColexResult,
    ColexStep,
    RevlexConditionReport,
    colex_ideal,
    greedy_generators,
    is_revlex_ideal,
    is_revlex_segment,
    revlex_condition_single_degree,
    revlex_conditions_two_degrees,
    segment_shadow_conditions,
)
from .enumeration import (
    enumerate_strongly_stable_ideals,
    enumerate_strongly_stable_sets,
    enumerate_strongly_stable_supersets,
)
from .errors import (
    AmbientCapExceeded,
    ContractViolation,
    DegreeTooHigh,
    FormulaInapplicable,
    HypothesisViolated,
    InsufficientMonomials,
    NotARevlexSegment,
    OracleTooLarge,
    ProfileMismatch,
)
from .ideals import (
    MonomialIdeal,
    degree_profile,
    graded_component,
    is_strongly_stable_ideal,
    is_strongly_stable_ideal_componentwise,
    minimalize,
    parse_monomial,
)
from .monomials import (
    Monomial,
    borel_reductions,
    common_degree,
    count_max_index_le,
    is_stable,
    is_strongly_stable,
    max_index_counts,
    monomials_of_degree,
    multiples_by,
    partial_shadow,
    restrict_max_index,
    revlex_cmp,
    revlex_descending,
    revlex_min,
    revlex_segment,
    shadow,
    sign_exponent,
)
from .verify import (
    CLAIMS,
    VerificationReport,
    run_claim,
    verify_bound_tables,
    verify_colex_lower_bound,
    verify_green,
    verify_minimal_shadow_membership,
    verify_oracle_agreement,
    verify_revlex_characterizations,
    verify_shadow_counting,
)

__version__ = "0.1.0"
