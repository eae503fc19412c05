"""Exact opacity and undetectable-attack analysis for discrete-time LTI systems."""
from .attacks import (
    AttackCertificate,
    CoexistenceReport,
    MonotonicityCheck,
    TradeoffReport,
    channel_range_inclusion,
    coexistence_report,
    is_attack_undetectable,
    square_feedthrough,
    synthesize_undetectable_attack,
    wus_monotonicity_check,
    x0_expansion_tradeoff,
)
from .errors import (
    AnalysisError,
    ChannelRankError,
    DimensionMismatch,
    NoExtension,
    NotASubset,
    NotStronglyOpaque,
    UnsupportedCombination,
)
from .io import Model, model_from_dict, parse_model
from .linalg import (
    Mat,
    Subspace,
    image,
    kernel,
    orth_complement,
    quotient_coords,
    rank,
    solve,
    subspace_intersect,
    subspace_sum,
)
from .lti import (
    AttackChannel,
    LtiSystem,
    forced_response_matrix,
    observability_matrix,
    simulate,
    simulate_attacked,
)
from .opacity import (
    CapacityComparison,
    OpacityVerdict,
    OpacityWitness,
    Relation,
    extend_opaque_set,
    is_state_opaque,
    is_strongly_opaque,
    is_weakly_opaque,
    largest_opaque_set,
    opacity_capacity_compare,
    opaque_partner_coset,
)
from .sets import (
    ComplementOfSubspace,
    Coset,
    Finite,
    FullSpace,
    Lin,
    MinkowskiSum,
    Poly,
    StateSet,
    Union,
    contains_set,
    coset_intersect,
    difference_body,
    member,
    minkowski_with_subspace,
)
from .wus import wus_chain, wus_complement, wus_kernel_method, wus_recursive, zeroing_input

__all__ = [
    "AnalysisError",
    "AttackCertificate",
    "AttackChannel",
    "CapacityComparison",
    "ChannelRankError",
    "CoexistenceReport",
    "ComplementOfSubspace",
    "Coset",
    "DimensionMismatch",
    "Finite",
    "FullSpace",
    "Lin",
    "LtiSystem",
    "Mat",
    "MinkowskiSum",
    "Model",
    "MonotonicityCheck",
    "NoExtension",
    "NotASubset",
    "NotStronglyOpaque",
    "OpacityVerdict",
    "OpacityWitness",
    "Poly",
    "Relation",
    "StateSet",
    "Subspace",
    "TradeoffReport",
    "Union",
    "UnsupportedCombination",
    "channel_range_inclusion",
    "coexistence_report",
    "contains_set",
    "coset_intersect",
    "difference_body",
    "extend_opaque_set",
    "forced_response_matrix",
    "image",
    "is_attack_undetectable",
    "is_state_opaque",
    "is_strongly_opaque",
    "is_weakly_opaque",
    "kernel",
    "largest_opaque_set",
    "member",
    "minkowski_with_subspace",
    "model_from_dict",
    "observability_matrix",
    "opacity_capacity_compare",
    "opaque_partner_coset",
    "orth_complement",
    "parse_model",
    "quotient_coords",
    "rank",
    "simulate",
    "simulate_attacked",
    "solve",
    "square_feedthrough",
    "subspace_intersect",
    "subspace_sum",
    "synthesize_undetectable_attack",
    "wus_chain",
    "wus_complement",
    "wus_kernel_method",
    "wus_monotonicity_check",
    "wus_recursive",
    "x0_expansion_tradeoff",
    "zeroing_input",
]
