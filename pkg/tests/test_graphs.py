"""Graph construction, line graphs, incidence identities, bridges, Euler trails."""

from __future__ import annotations

import numpy as np
import pytest

from schurwalk import (
    Graph,
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
from schurwalk.acceptance import random_connected_graph
from schurwalk.errors import Disconnected, EmptyGraph, OddDegreeVertex, ParseError


def test_edges_are_canonicalized():
    g = Graph(3, ((2, 1), (1, 0)))
    assert g.edges == ((0, 1), (1, 2))


def test_graph_rejects_self_loops_duplicates_and_range():
    with pytest.raises(ValueError):
        Graph(3, ((1, 1),))
    with pytest.raises(ValueError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Graph(2, ((0, 2),))


def test_adjacency_examples():
    assert (adjacency_matrix(complete_graph(3)) == np.ones((3, 3)) - np.eye(3)).all()
    a = adjacency_matrix(path_graph(3))
    assert a[0, 1] == a[1, 2] == 1 and a[0, 2] == 0
    assert not adjacency_matrix(Graph(2, ())).any()


def test_laplacian_examples():
    evals = np.linalg.eigvalsh(laplacian_matrix(complete_graph(3)).astype(float))
    assert np.allclose(evals, [0, 3, 3])
    assert (laplacian_matrix(Graph(2, ((0, 1),))) == [[1, -1], [-1, 1]]).all()
    evals = np.linalg.eigvalsh(laplacian_matrix(cycle_graph(4)).astype(float))
    assert np.allclose(evals, [0, 2, 2, 4])


def test_line_graph_reference_pairs():
    assert line_graph(complete_bipartite_graph(1, 3)) == complete_graph(3)
    assert line_graph(complete_graph(3)) == complete_graph(3)
    assert line_graph(path_graph(4)) == path_graph(3)


def test_line_graph_of_single_edge_is_a_point():
    assert line_graph(Graph(2, ((0, 1),))) == Graph(1, ())


def test_incidence_small_examples():
    b = incidence_matrix(path_graph(3))
    assert (b == np.array([[1, 0], [1, 1], [0, 1]])).all()
    k3 = complete_graph(3)
    bbt = incidence_matrix(k3) @ incidence_matrix(k3).T
    assert (np.diag(bbt) == 2).all()
    assert (bbt - np.diag(np.diag(bbt)) == adjacency_matrix(k3)).all()


def test_incidence_identities_exact_on_random_graphs():
    rng = np.random.default_rng(42)
    for _ in range(25):
        g = random_connected_graph(rng, 2, 8)
        b = incidence_matrix(g)
        assert (b.sum(axis=0) == 2).all()
        assert (b.sum(axis=1) == g.degrees()).all()
        assert (b @ b.T == np.diag(g.degrees()) + adjacency_matrix(g)).all()
        lhs = b.T @ b - 2 * np.eye(g.n_edges, dtype=int)
        assert (lhs == adjacency_matrix(line_graph(g))).all()


def test_line_graph_degree_law():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = random_connected_graph(rng, 2, 8)
        deg = g.degrees()
        line_deg = line_graph(g).degrees()
        for idx, (u, v) in enumerate(g.edges):
            assert line_deg[idx] == deg[u] + deg[v] - 2


def test_tensor_product_examples():
    k2 = Graph(2, ((0, 1),))
    product = tensor_product(k2, k2)
    assert product.n_vertices == 4 and product.edges == ((0, 3), (1, 2))
    assert tensor_product(complete_graph(3), Graph(1, ())).n_edges == 0


def test_tensor_product_matches_kronecker():
    rng = np.random.default_rng(3)
    for _ in range(10):
        g1 = random_connected_graph(rng, 2, 4)
        g2 = random_connected_graph(rng, 2, 4)
        expected = np.kron(adjacency_matrix(g1), adjacency_matrix(g2))
        assert (adjacency_matrix(tensor_product(g1, g2)) == expected).all()


def test_bridges():
    assert bridges(path_graph(4)) == [0, 1, 2]
    assert bridges(cycle_graph(4)) == []
    assert bridges(figure_eight_graph()) == []


def _check_closed_trail(g: Graph, trail: list[int]) -> None:
    assert sorted(trail) == list(range(g.n_edges))
    start = g.edges[trail[0]][0]
    current = start
    for idx in trail:
        u, v = g.edges[idx]
        assert current in (u, v)
        current = v if current == u else u
    assert current == start


def test_eulerian_trail_examples():
    c4 = cycle_graph(4)
    trail = eulerian_trail(c4)
    _check_closed_trail(c4, trail)

    fig8 = figure_eight_graph()
    trail = eulerian_trail(fig8)
    _check_closed_trail(fig8, trail)
    # the shared vertex is entered twice
    visits = sum(1 for idx in trail if 0 in fig8.edges[idx])
    assert visits == 4

    with pytest.raises(OddDegreeVertex):
        eulerian_trail(path_graph(3))
    with pytest.raises(EmptyGraph):
        eulerian_trail(Graph(1, ()))
    two_triangles = Graph(6, ((0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)))
    with pytest.raises(Disconnected):
        eulerian_trail(two_triangles)


def test_eulerian_trail_on_larger_even_graphs():
    for g in (complete_graph(5), cycle_graph(6), complete_graph(7)):
        _check_closed_trail(g, eulerian_trail(g))


def test_eulerian_trail_is_deterministic():
    assert eulerian_trail(figure_eight_graph()) == [0, 4, 5, 1, 2, 6, 7, 3]


def test_connected_components():
    assert connected_components(cycle_graph(4)) == [[0, 1, 2, 3]]
    # two disjoint edges, which is also P4 minus its middle edge
    assert connected_components(Graph(4, ((0, 1), (2, 3)))) == [[0, 1], [2, 3]]
    assert connected_components(Graph(3, ())) == [[0], [1], [2]]


def test_edge_list_round_trip():
    g = figure_eight_graph()
    assert parse_edge_list(format_edge_list(g)) == g
    text = format_edge_list(g, comments=["a note"])
    assert text.startswith("# a note\n")
    assert parse_edge_list(text) == g


def test_edge_list_parse_errors():
    with pytest.raises(ParseError):
        parse_edge_list("")
    with pytest.raises(ParseError):
        parse_edge_list("2 1\n1 0\n")  # u >= v
    with pytest.raises(ParseError):
        parse_edge_list("2 2\n0 1\n")  # count mismatch
    with pytest.raises(ParseError):
        parse_edge_list("3 2\n1 2\n0 1\n")  # unsorted
    with pytest.raises(ParseError):
        parse_edge_list("3 x\n")


def test_edge_list_ignores_blank_lines_and_comments():
    g = parse_edge_list("# header\n\n3 2\n# middle\n0 1\n\n1 2\n")
    assert g == path_graph(3)
