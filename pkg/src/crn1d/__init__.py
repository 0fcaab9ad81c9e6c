"""Analysis of mass-action reaction networks with a one-dimensional
stoichiometric subspace: structure extraction, arrow-diagram counting,
capacity classification, and construction of verified steady-state
witnesses."""

from .arrows import (
    AdReport,
    ArrowDiagram,
    DiagramPairs,
    ad_count,
    diagram_pair_witnesses,
    one_species_diagram,
)
from .classify import (
    CAP_AT_LEAST_THREE,
    CAP_AT_MOST_TWO,
    CAP_INFINITE,
    CAP_UNKNOWN,
    CAP_ZERO,
    BiReactionProfile,
    CapacityClass,
    LambdaNotOpposed,
    NotBiReaction,
    Notice,
    Report,
    SufficientCertificate,
    TestReport,
    TwoReactionReport,
    bi_profile,
    capacity_class_bi,
    classify,
    necessary_pair_test,
    necessary_three_test,
    sufficient_two_test,
    two_nondeg_bi,
)
from .cli import enumerate_bi_networks, main
from .network import (
    CrnError,
    Embedding,
    EmptyEmbedding,
    EssentialEmpty,
    EssentialReduction,
    EssentialSets,
    NotOneDimensional,
    OneDimStructure,
    ParseError,
    Reaction,
    ReactionNetwork,
    ZeroBaseDirection,
    conservation_constants,
    embed,
    essential_sets,
    format_network,
    one_dim_structure,
    parse_network,
    reduce_to_essential,
    stoichiometric_matrix,
)
from .numeric import (
    ConstantG,
    DimensionMismatch,
    EmptyInterval,
    GProblem,
    OutOfDomain,
    RootSet,
    StateCheck,
    VerificationReport,
    critical_points,
    eval_g,
    find_roots,
    is_constant,
    oracle_count,
    oracle_counts,
    verify_witness,
)
from .witness import (
    BisectionStalled,
    ClaimEndpointFailed,
    GoalUnattainable,
    NoSecondCriticalPoint,
    RecipeFailed,
    RootOutsideInterval,
    Witness,
    assemble_witness,
    choose_K_three,
    choose_d_three,
    g_problem,
    witness_three,
    witness_two_general,
)

__version__ = "0.1.0"

__all__ = [
    "AdReport",
    "ArrowDiagram",
    "BiReactionProfile",
    "BisectionStalled",
    "CAP_AT_LEAST_THREE",
    "CAP_AT_MOST_TWO",
    "CAP_INFINITE",
    "CAP_UNKNOWN",
    "CAP_ZERO",
    "CapacityClass",
    "ClaimEndpointFailed",
    "ConstantG",
    "CrnError",
    "DiagramPairs",
    "DimensionMismatch",
    "Embedding",
    "EmptyEmbedding",
    "EmptyInterval",
    "EssentialEmpty",
    "EssentialReduction",
    "EssentialSets",
    "GProblem",
    "GoalUnattainable",
    "LambdaNotOpposed",
    "NoSecondCriticalPoint",
    "NotBiReaction",
    "NotOneDimensional",
    "Notice",
    "OneDimStructure",
    "OutOfDomain",
    "ParseError",
    "Reaction",
    "ReactionNetwork",
    "RecipeFailed",
    "Report",
    "RootOutsideInterval",
    "RootSet",
    "StateCheck",
    "SufficientCertificate",
    "TestReport",
    "TwoReactionReport",
    "VerificationReport",
    "Witness",
    "ZeroBaseDirection",
    "ad_count",
    "assemble_witness",
    "bi_profile",
    "capacity_class_bi",
    "choose_K_three",
    "choose_d_three",
    "classify",
    "conservation_constants",
    "critical_points",
    "diagram_pair_witnesses",
    "embed",
    "enumerate_bi_networks",
    "essential_sets",
    "eval_g",
    "find_roots",
    "format_network",
    "g_problem",
    "is_constant",
    "main",
    "one_dim_structure",
    "one_species_diagram",
    "oracle_count",
    "oracle_counts",
    "parse_network",
    "reduce_to_essential",
    "stoichiometric_matrix",
    "two_nondeg_bi",
    "verify_witness",
    "witness_three",
    "witness_two_general",
]
