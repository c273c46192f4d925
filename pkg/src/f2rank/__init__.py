"""Exact GF(2) toolkit for twin-free graphs of minimal binary rank."""

from .gf2 import (
    BitMatrix,
    BitVector,
    F2MatFormatError,
    rank,
    row_space_contains,
    rows_form_subspace,
)
from .graph import (
    Graph,
    Graph6FormatError,
    NonzeroDiagonalError,
    NotSymmetricError,
    from_graph6,
    is_negation_free,
    is_twin_free,
    line_graph,
    to_graph6,
)
from .products import (
    SignMatrix,
    kronecker,
    parity_product,
    parity_product_graph,
    sign_map,
    unsign_map,
)
from .constructions import (
    complete_graph,
    extremal_odd_plus_one,
    g2,
    g2_power,
    linegraph_clique_plus_isolated,
)
from .spectral import (
    Spectrum,
    analytic_spectrum,
    graph_spectrum,
    is_hadamard,
    jacobi_eigensystem,
    jacobi_spectrum,
)
from .verify import (
    CheckResult,
    CosetDecomposition,
    SrgParams,
    SrgViolation,
    VerificationReport,
    check_balanced_rows,
    check_pairwise_quarters,
    coset_decompose,
    decomposition_invariants,
    full_report,
    quasirandom_deviation,
    srg_parameters,
    verify_extremal,
)
from .search import (
    enumerate_n2,
    isomorphic,
    nonexistence_n3_exhaustive,
    nonexistence_n3_structured,
    run_exhaustive_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BitMatrix",
    "BitVector",
    "F2MatFormatError",
    "rank",
    "row_space_contains",
    "rows_form_subspace",
    "Graph",
    "Graph6FormatError",
    "NonzeroDiagonalError",
    "NotSymmetricError",
    "from_graph6",
    "is_negation_free",
    "is_twin_free",
    "line_graph",
    "to_graph6",
    "SignMatrix",
    "kronecker",
    "parity_product",
    "parity_product_graph",
    "sign_map",
    "unsign_map",
    "complete_graph",
    "extremal_odd_plus_one",
    "g2",
    "g2_power",
    "linegraph_clique_plus_isolated",
    "Spectrum",
    "analytic_spectrum",
    "graph_spectrum",
    "is_hadamard",
    "jacobi_eigensystem",
    "jacobi_spectrum",
    "CheckResult",
    "CosetDecomposition",
    "SrgParams",
    "SrgViolation",
    "VerificationReport",
    "check_balanced_rows",
    "check_pairwise_quarters",
    "coset_decompose",
    "decomposition_invariants",
    "full_report",
    "quasirandom_deviation",
    "srg_parameters",
    "verify_extremal",
    "enumerate_n2",
    "isomorphic",
    "nonexistence_n3_exhaustive",
    "nonexistence_n3_structured",
    "run_exhaustive_sweep",
]
