"""Eccentricity version of Laplacian energy for simple connected graphs."""

from .bounds import (
    BoundsReport,
    LemmaResiduals,
    check_bounds,
    lemma_residuals,
    theorem1_lower,
    theorem2_lower,
    theorem3_lower,
    theorem3_stated,
    theorem4_upper,
    theorem5_lower,
)
from .graph_core import (
    Graph,
    GraphError,
    GraphFamily,
    ParseError,
    enumerate_connected,
    generate_family,
    parse_edge_list,
    parse_graph6,
    write_graph6,
)
from .linalg import ConvergenceError, Spectrum, SymmetricMatrix, eigenvalues, frobenius_sq, trace
from .metrics import (
    DisconnectedGraphError,
    EccentricityProfile,
    bfs_distances,
    eccentricity_profile,
    is_connected,
)
from .spectral_energy import (
    EnergyReport,
    adjacency_energy,
    adjacency_matrix,
    ecc_laplacian_energy,
    ecc_laplacian_matrix,
    energy_reports,
    laplacian_energy,
    laplacian_matrix,
)

__version__ = "0.1.0"
