"""Exact counting and enumeration of zero-eigenvalue eigenvectors of uniform hypergraphs."""

from .estimator import FirstEigenvectorModel, ZeroSpectrumFeatures, check_hypergraph
from .exceptions import DisconnectedError, HypergraphError, InvariantViolation
from .hypergraph import (
    Hypergraph,
    connected_components,
    gen_complete,
    gen_cored_star,
    gen_power,
    gen_random_connected,
    incidence_matrix,
    is_connected,
    parse_hypergraph,
)
from .linalg import (
    composition_length,
    enumerate_solutions,
    integer_snf,
    invariant_divisors_mod,
    rank_gf2,
    solve_mod,
)
from .oracle import apply_tensor, brute_force_count, exponent_to_vector, residual, verify_diag_similarity
from .spectral import (
    ZeroSpectrum,
    ZeroSpectrumReport,
    count_first_laplacian,
    count_first_signless,
    count_H,
    count_N,
    enumerate_bipartitions,
    enumerate_eigenvectors,
    is_odd_bipartite,
    is_odd_colorable,
    zero_spectrum_report,
)

__version__ = "0.1.0"
