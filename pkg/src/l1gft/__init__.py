"""Graph Fourier bases by l1 variation minimization.

Exact enumeration oracle for small graphs, greedy merge-tree approximation
for large graphs, forward/inverse transforms with an O(N) fast path, and an
experiment harness comparing both against the Laplacian eigenbasis.
"""

from .graph import Graph, block_weight, laplacian, load_graph, random_geometric_graph, save_graph
from .variation import (
    basis_variation_sum,
    directed_variation,
    l1_variation,
    l2_variation,
    relative_variation_error,
)
from .piecewise import (
    PiecewiseRepresentation,
    kernel_dimension,
    local_linear_form,
    piecewise_rep,
    reconstruct,
    satisfies_necessary_condition,
)
from .exact import CriticalPoint, ExactL1Basis, enumerate_critical_set, exact_l1_basis, solve_step
from .greedy import (
    GreedyBasis,
    MergeRecord,
    MergeTree,
    build_merge_tree,
    greedy_basis_from_tree,
    verify_critical_structure,
)
from .spectral import LaplacianBasis, eigen_variation_check, laplacian_basis
from .transform import (
    ApproximationCurve,
    SpectralCoefficients,
    fast_greedy_transform,
    inverse_transform,
    n_term_curve,
    naive_transform,
    simulated_signal,
)

__version__ = "0.1.0"
