"""Exact counts of acyclic orientations for complete bipartite graphs.

Closed-form counters for K_{n1,n2} and its one-edge modifications, the
identification of those counts with negative-order poly-Bernoulli numbers
and lonesum-matrix counts, and brute-force plus chromatic-polynomial
oracles to verify everything at small scale.
"""

from .combinum import StirlingTable, factorial, poly_bernoulli_neg, stirling2
from .formulas import (
    BipartiteSpec,
    Modification,
    count_complete_bipartite,
    count_for_spec,
    count_minus_edge,
    count_plus_edge,
    flippable_count_formula,
)
from .graphcore import (
    ChromaticPolynomial,
    Graph,
    Orientation,
    chromatic_polynomial,
    complete_bipartite,
    count_acyclic_bruteforce,
    flippable_count_bruteforce,
    is_acyclic,
    stanley_count,
    with_edge_added_in_block1,
    with_edge_removed,
)
from .lonesum import (
    BinaryMatrix,
    count_lonesum_bruteforce,
    find_forbidden_submatrix,
    has_directed_4cycle,
    is_lonesum,
    matrix_to_orientation,
    orientation_to_matrix,
)

__all__ = [
    "StirlingTable",
    "factorial",
    "poly_bernoulli_neg",
    "stirling2",
    "BipartiteSpec",
    "Modification",
    "count_complete_bipartite",
    "count_for_spec",
    "count_minus_edge",
    "count_plus_edge",
    "flippable_count_formula",
    "ChromaticPolynomial",
    "Graph",
    "Orientation",
    "chromatic_polynomial",
    "complete_bipartite",
    "count_acyclic_bruteforce",
    "flippable_count_bruteforce",
    "is_acyclic",
    "stanley_count",
    "with_edge_added_in_block1",
    "with_edge_removed",
    "BinaryMatrix",
    "count_lonesum_bruteforce",
    "find_forbidden_submatrix",
    "has_directed_4cycle",
    "is_lonesum",
    "matrix_to_orientation",
    "orientation_to_matrix",
]

__version__ = "0.1.0"
