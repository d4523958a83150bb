"""Vital-node ranking for undirected, unweighted networks.

Rank nodes with gravity-family and classic centralities (including an
efficiency-scaled gravity score), simulate SI spreading, and evaluate
rankings against simulated spreading ability with Kendall correlation.

The hot kernels run on a compiled extension when available and on a NumPy
fallback otherwise; see `vitalrank.backend_name()`.
"""

from ._kernels import BACKEND as _BACKEND
from .centrality import (
    METHODS,
    CentralityScores,
    betweenness,
    compute_scores,
    degree_centrality,
    efficiency_gravity,
    generalized_gravity,
    gravity,
    iterative_resource_allocation,
    principal_eigenvector,
    quasi_laplacian,
    resource_trajectory,
    weighted_gravity,
)
from .efficiency import (
    EfficiencyReport,
    deleted_efficiency,
    efficiency_ratios,
    network_efficiency,
)
from .epidemic import SiConfig, SiOutcome, si_simulate, spreading_ability
from .errors import ConvergenceError, EdgeListParseError, VitalrankError
from .evaluate import (
    DEFAULT_BETAS,
    SpreadingCurveSet,
    TauSweep,
    kendall_tau,
    tau_vs_beta_sweep,
    topk_spreading,
)
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    Graph,
    IngestReport,
    all_pairs_shortest_paths,
    connected_components,
    induced_subgraph,
    local_clustering,
    local_clustering_all,
    mean_shortest_path,
    parse_edge_list,
)

__version__ = "0.1.0"


def backend_name() -> str:
    """Which kernel backend is active: 'c' (compiled) or 'python'."""
    return _BACKEND


__all__ = [
    "METHODS",
    "DEFAULT_BETAS",
    "UNREACHABLE",
    "Graph",
    "IngestReport",
    "DistanceMatrix",
    "CentralityScores",
    "EfficiencyReport",
    "SiConfig",
    "SiOutcome",
    "TauSweep",
    "SpreadingCurveSet",
    "VitalrankError",
    "EdgeListParseError",
    "ConvergenceError",
    "parse_edge_list",
    "all_pairs_shortest_paths",
    "mean_shortest_path",
    "local_clustering",
    "local_clustering_all",
    "connected_components",
    "induced_subgraph",
    "network_efficiency",
    "deleted_efficiency",
    "efficiency_ratios",
    "degree_centrality",
    "gravity",
    "weighted_gravity",
    "generalized_gravity",
    "betweenness",
    "iterative_resource_allocation",
    "resource_trajectory",
    "quasi_laplacian",
    "efficiency_gravity",
    "principal_eigenvector",
    "compute_scores",
    "si_simulate",
    "spreading_ability",
    "kendall_tau",
    "tau_vs_beta_sweep",
    "topk_spreading",
    "backend_name",
]
