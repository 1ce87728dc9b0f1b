"""Exact and sampled analysis of one-round recoloring protocols on paths.

The package enumerates the 32 one-round conflict-state protocols, verifies
their closed-form defect censuses against brute-force enumeration, samples
regimes enumeration cannot reach, and demonstrates why symmetric adjacent
pairs defeat every such protocol.
"""

from .analytics import (
    CENTER_CORRECTING_VARIANTS,
    AnalyticsError,
    DefectDistribution,
    GroupCountVector,
    average_defects,
    center_correcting_average,
    center_correcting_convolution,
    center_correcting_distribution_c2,
    chromatic_polynomial_path,
    edge_correcting_distribution,
    group_count_vector,
    pascal_row_property,
    random_defect_distribution,
)
from .coloring import (
    ColoringError,
    ColorState,
    ConflictState,
    DefectGroup,
    DefectGroupDecomposition,
    conflict_state,
    count_defects,
    defect_groups,
)
from .graph import (
    FlowGraph,
    GraphError,
    NodeType,
    build_path,
    diameter,
    node_type,
    parse_graph_text,
    r_hop_neighbors,
)
from .messaging import LocalTree, LocalView, MessagingError, anonymize, run_rounds
from .montecarlo import (
    CHROMATIC_NUMBER_PATH,
    DatasetRow,
    MonteCarloError,
    TrialReport,
    defects_vs_colors_dataset,
    sample_protocol,
)
from .oracle import (
    BudgetExceeded,
    EnumerationBudget,
    default_budget_limit,
    oracle_group_counts,
    oracle_protocol_distribution,
    oracle_random_distribution,
)
from .protocols import (
    ProtocolError,
    ProtocolOutcome,
    ProtocolSpec,
    WeightedOutcome,
    decide,
    enumerate_protocols,
    execute,
    execute_all_outcomes,
    view_decisions,
)
from .symmetry import (
    HYPOTHESIS_NOTE,
    ImpossibilityReport,
    ImpossibilityRow,
    SymmetricPair,
    SymmetryError,
    adversarial_state,
    find_symmetric_pair,
    impossibility_check,
    pair_is_symmetric,
)
from .verify import (
    Theorem5Adjudication,
    VerificationResult,
    VerifyRow,
    edge_correcting_randomization_independent,
    run_verification,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticsError",
    "BudgetExceeded",
    "CENTER_CORRECTING_VARIANTS",
    "CHROMATIC_NUMBER_PATH",
    "ColoringError",
    "ColorState",
    "ConflictState",
    "DatasetRow",
    "DefectDistribution",
    "DefectGroup",
    "DefectGroupDecomposition",
    "EnumerationBudget",
    "FlowGraph",
    "GraphError",
    "GroupCountVector",
    "HYPOTHESIS_NOTE",
    "ImpossibilityReport",
    "ImpossibilityRow",
    "LocalTree",
    "LocalView",
    "MessagingError",
    "MonteCarloError",
    "NodeType",
    "ProtocolError",
    "ProtocolOutcome",
    "ProtocolSpec",
    "SymmetricPair",
    "SymmetryError",
    "Theorem5Adjudication",
    "TrialReport",
    "VerificationResult",
    "VerifyRow",
    "WeightedOutcome",
    "adversarial_state",
    "anonymize",
    "average_defects",
    "build_path",
    "center_correcting_average",
    "center_correcting_convolution",
    "center_correcting_distribution_c2",
    "chromatic_polynomial_path",
    "conflict_state",
    "count_defects",
    "decide",
    "default_budget_limit",
    "defect_groups",
    "defects_vs_colors_dataset",
    "diameter",
    "edge_correcting_distribution",
    "edge_correcting_randomization_independent",
    "enumerate_protocols",
    "execute",
    "execute_all_outcomes",
    "find_symmetric_pair",
    "group_count_vector",
    "impossibility_check",
    "node_type",
    "oracle_group_counts",
    "oracle_protocol_distribution",
    "oracle_random_distribution",
    "pair_is_symmetric",
    "parse_graph_text",
    "pascal_row_property",
    "r_hop_neighbors",
    "random_defect_distribution",
    "run_rounds",
    "run_verification",
    "sample_protocol",
    "view_decisions",
]
