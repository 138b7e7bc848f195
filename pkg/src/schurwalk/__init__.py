"""Edge-state quantum walks on line graphs.

Build a simple graph, walk edge states on its line graph, extract the induced
real-weighted graph and its time average, classify states by their behavior
under average mixing, and relate the averaged weights to spanning-tree counts.
"""

from .classify import (
    Classification,
    FlatBandState,
    classification_to_json,
    classify,
    commutator_norm,
    flat_band_state,
    is_eigenvector,
    line_graph_spectral_floor,
)
from .entropy import (
    binary_entropy,
    disjoint_union_entropy_check,
    vertex_entropy,
    von_neumann_entropy,
)
from .errors import SchurWalkError
from .graphs import (
    Graph,
    WeightedGraph,
    adjacency_matrix,
    bridges,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    eulerian_trail,
    figure_eight_graph,
    format_edge_list,
    incidence_matrix,
    laplacian_matrix,
    line_graph,
    parse_edge_list,
    path_graph,
    tensor_product,
)
from .mixing import (
    average_mixing,
    averaged_density,
    averaged_induced,
    mixing_to_json,
    path_mixing_closed_form,
)
from .spectral import Spectrum, decompose, dephase, evolve, numeric_time_average
from .states import (
    InducedWeightedGraph,
    SchurState,
    basis_state,
    edge_state,
    induced_graph,
    schur_inner,
    schur_state,
    schur_state_from_json,
    schur_state_to_json,
    schur_tensor,
    uniform_state,
)
from .treecount import (
    TreeCount,
    bridge_factorization_check,
    main_theorem_check,
    pure_state_tree_count,
    spanning_trees,
    tree_count_det,
    tree_count_enum,
    tree_count_eigen,
    uniform_optimality_scan,
)

__all__ = [
    "Classification",
    "FlatBandState",
    "Graph",
    "InducedWeightedGraph",
    "SchurState",
    "SchurWalkError",
    "Spectrum",
    "TreeCount",
    "WeightedGraph",
    "adjacency_matrix",
    "average_mixing",
    "averaged_density",
    "averaged_induced",
    "basis_state",
    "binary_entropy",
    "bridge_factorization_check",
    "bridges",
    "classification_to_json",
    "classify",
    "commutator_norm",
    "complete_bipartite_graph",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "decompose",
    "dephase",
    "disjoint_union_entropy_check",
    "edge_state",
    "eulerian_trail",
    "evolve",
    "figure_eight_graph",
    "flat_band_state",
    "format_edge_list",
    "incidence_matrix",
    "induced_graph",
    "is_eigenvector",
    "laplacian_matrix",
    "line_graph",
    "line_graph_spectral_floor",
    "main_theorem_check",
    "mixing_to_json",
    "numeric_time_average",
    "parse_edge_list",
    "path_graph",
    "path_mixing_closed_form",
    "pure_state_tree_count",
    "schur_inner",
    "schur_state",
    "schur_state_from_json",
    "schur_state_to_json",
    "schur_tensor",
    "spanning_trees",
    "tensor_product",
    "tree_count_det",
    "tree_count_enum",
    "tree_count_eigen",
    "uniform_optimality_scan",
    "uniform_state",
    "vertex_entropy",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
