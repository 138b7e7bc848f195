"""Graphs, line graphs, and the incidence-matrix identities.

The whole package is built on one indexing convention: edges are sorted
lexicographically as (u, v) with u < v, and vertex p of the line graph IS
edge p of the base graph.  This script builds the stock examples and checks
the two incidence identities that tie a graph to its line graph.
"""

import numpy as np

from schurwalk import (
    adjacency_matrix,
    complete_bipartite_graph,
    complete_graph,
    figure_eight_graph,
    format_edge_list,
    incidence_matrix,
    line_graph,
    path_graph,
)

# The classic ambiguous pair: the star and the triangle have the same line graph.
star = complete_bipartite_graph(1, 3)
triangle = complete_graph(3)
print("line graph of the 3-star: ", line_graph(star).edges)
print("line graph of the triangle:", line_graph(triangle).edges)
print("equal?", line_graph(star) == line_graph(triangle))

# A path shrinks by one vertex.
print("\nline graph of the 4-path equals the 3-path:",
      line_graph(path_graph(4)) == path_graph(3))

# The figure-eight graph: two squares sharing one vertex.  Its line graph is
# non-regular, which matters later for flat-band states.
fig8 = figure_eight_graph()
print("\nfigure-eight edge list:")
print(format_edge_list(fig8))
print("line-graph degrees:", line_graph(fig8).degrees())

# Incidence identities, exact in integer arithmetic:
#   B B^T = D + A        and        B^T B = 2I + A(line graph)
b = incidence_matrix(fig8)
lhs = b.T @ b - 2 * np.eye(fig8.n_edges, dtype=int)
print("\nB^T B - 2I == A(line graph):", (lhs == adjacency_matrix(line_graph(fig8))).all())
bbt = b @ b.T
print("B B^T == D + A:", (bbt == np.diag(fig8.degrees()) + adjacency_matrix(fig8)).all())
