"""Spectra of blend matrices of mixed graphs, with verified bounds.

A mixed graph carries undirected edges and directed arcs. Its blend matrix
is alpha * D + (1 - alpha) * H, where D is the degree-diagonal matrix of the
underlying graph and H is the complex Hermitian adjacency matrix whose arc
entries are a fixed unit-modulus number beta (omega = (1 + i sqrt 3)/2 by
default). This package builds those matrices, computes their spectra with
two independent eigensolvers, and checks a catalog of eigenvalue, spread and
trace-norm bounds against the results.
"""

from .bounds import (
    BoundKind,
    BoundResult,
    BoundTarget,
    WolkowiczMoments,
    garga_extreme_bounds,
    jth_eigenvalue_bounds,
    rayleigh_mu1_lower,
    rho_sandwich,
    spread_bounds,
    spread_moment_bounds,
    trace_norm_upper,
    unit_modulus_extreme_bounds,
    wolkowicz_extreme_bounds,
    zagreb_index_bound,
    zagreb_refined_extreme_bounds,
)
from .eig import (
    EmbeddingPairingError,
    KernelConvergenceError,
    Spectrum,
    eigenvalues,
    oracle_eigenvalues,
    spectral_radius,
    spread,
    trace_norm,
)
from .graphs import (
    GraphFormatError,
    GraphStats,
    MixedGraph,
    graph_stats,
    parse_graph,
    random_mixed_graph,
    serialize_graph,
    zagreb_lower_bound,
)
from .harness import (
    BoundReport,
    CheckedBound,
    Status,
    SuiteSummary,
    SweepConfig,
    VerificationError,
    ViolationRecord,
    randomized_suite,
    rayleigh_range_check,
    run_trial,
    sweep_alpha,
    verify_all,
)
from .matrices import (
    AlphaParam,
    BetaParam,
    HermitianMatrix,
    a_alpha_matrix,
    degree_matrix,
    expected_traces,
    hermitian_adjacency,
    hermitian_from_array,
    matrix_from_text,
    matrix_to_text,
    omega_constant,
    quadratic_form,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaParam",
    "BetaParam",
    "BoundKind",
    "BoundReport",
    "BoundResult",
    "BoundTarget",
    "CheckedBound",
    "EmbeddingPairingError",
    "GraphFormatError",
    "GraphStats",
    "HermitianMatrix",
    "KernelConvergenceError",
    "MixedGraph",
    "Spectrum",
    "Status",
    "SuiteSummary",
    "SweepConfig",
    "VerificationError",
    "ViolationRecord",
    "WolkowiczMoments",
    "a_alpha_matrix",
    "degree_matrix",
    "eigenvalues",
    "expected_traces",
    "garga_extreme_bounds",
    "graph_stats",
    "hermitian_adjacency",
    "hermitian_from_array",
    "jth_eigenvalue_bounds",
    "matrix_from_text",
    "matrix_to_text",
    "omega_constant",
    "oracle_eigenvalues",
    "parse_graph",
    "quadratic_form",
    "randomized_suite",
    "random_mixed_graph",
    "rayleigh_mu1_lower",
    "rayleigh_range_check",
    "rho_sandwich",
    "run_trial",
    "serialize_graph",
    "spectral_radius",
    "spread",
    "spread_bounds",
    "spread_moment_bounds",
    "sweep_alpha",
    "trace_norm",
    "trace_norm_upper",
    "unit_modulus_extreme_bounds",
    "verify_all",
    "wolkowicz_extreme_bounds",
    "zagreb_index_bound",
    "zagreb_lower_bound",
    "zagreb_refined_extreme_bounds",
]
