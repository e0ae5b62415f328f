"""Graph energy toolkit.

Builds splitting, shadow, shadow-splitting, and Kronecker-product graphs from
dense adjacency matrices; computes spectra and energies both by brute-force
eigensolving and by closed-form scale factors; and verifies parameterized
families of equienergetic and borderenergetic graphs.
"""

from .families import (
    FamilySpec,
    OutOfDomainError,
    VerificationReport,
    canonical_equienergetic_pair,
    family_ids,
    instantiate_family,
    sweep,
    verify,
    verify_borderenergetic,
    verify_equienergetic,
)
from .formulas import (
    EnergyPrediction,
    known_energy,
    quotient_matrix_spectrum,
    shadow_coefficient_spectrum,
    shadow_split_energy_factor,
    split_coefficient_spectrum,
    split_energy_factor,
)
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    max_order,
    path_graph,
    random_graph,
    star_graph,
)
from .io import (
    decode_graph6,
    encode_graph6,
    read_edge_list,
    read_graph_text,
    read_matrix_market,
    write_edge_list,
    write_graph_text,
    write_matrix_market,
)
from .operators import (
    CoefficientMatrix,
    ShadowSplitParams,
    SplitParams,
    coefficient_matrix_shadow,
    coefficient_matrix_split,
    construct_by_neighborhood,
    generalized_splitting,
    kronecker_product,
    m_shadow,
    m_splitting,
    shadow_splitting,
)
from .spectral import (
    Spectrum,
    adjacency_spectrum,
    are_cospectral,
    eigenvalues_symmetric,
    energy,
    jacobi_eigenvalues,
    structured_spectrum,
    verification_tolerance,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientMatrix",
    "EnergyPrediction",
    "FamilySpec",
    "Graph",
    "OutOfDomainError",
    "ShadowSplitParams",
    "Spectrum",
    "SplitParams",
    "VerificationReport",
    "adjacency_spectrum",
    "are_cospectral",
    "canonical_equienergetic_pair",
    "coefficient_matrix_shadow",
    "coefficient_matrix_split",
    "complete_bipartite",
    "complete_graph",
    "construct_by_neighborhood",
    "cycle_graph",
    "decode_graph6",
    "disjoint_union",
    "eigenvalues_symmetric",
    "empty_graph",
    "encode_graph6",
    "energy",
    "family_ids",
    "from_edges",
    "generalized_splitting",
    "instantiate_family",
    "jacobi_eigenvalues",
    "known_energy",
    "kronecker_product",
    "m_shadow",
    "m_splitting",
    "max_order",
    "path_graph",
    "quotient_matrix_spectrum",
    "random_graph",
    "read_edge_list",
    "read_graph_text",
    "read_matrix_market",
    "shadow_coefficient_spectrum",
    "shadow_split_energy_factor",
    "shadow_splitting",
    "split_coefficient_spectrum",
    "split_energy_factor",
    "star_graph",
    "structured_spectrum",
    "sweep",
    "verification_tolerance",
    "verify",
    "verify_borderenergetic",
    "verify_equienergetic",
    "write_edge_list",
    "write_graph_text",
    "write_matrix_market",
]
