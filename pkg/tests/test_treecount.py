"""Tree counts: determinant vs enumeration, the averaged-graph identity, bridges."""

from __future__ import annotations

import itertools

import numpy as np
import pytest

from schurwalk import (
    Graph,
    WeightedGraph,
    adjacency_matrix,
    basis_state,
    bridge_factorization_check,
    complete_graph,
    cycle_graph,
    decompose,
    figure_eight_graph,
    flat_band_state,
    line_graph,
    main_theorem_check,
    path_graph,
    pure_state_tree_count,
    spanning_trees,
    tree_count_det,
    tree_count_enum,
    tree_count_eigen,
    uniform_optimality_scan,
    uniform_state,
)
from schurwalk.acceptance import random_connected_graph
from schurwalk.errors import (
    Disconnected,
    EmptyGraph,
    NotABridge,
    NotFullSupport,
    TooLarge,
)
from schurwalk.graphs import is_connected
from schurwalk.mixing import averaged_induced


def _line_spectrum(g):
    return decompose(adjacency_matrix(line_graph(g)))


def test_reference_counts():
    k3 = WeightedGraph(complete_graph(3), np.ones(3))
    assert abs(tree_count_det(k3).value - 3.0) < 1e-12
    assert tree_count_enum(k3).value == 3.0

    c4 = WeightedGraph(cycle_graph(4), np.full(4, 0.25))
    assert abs(tree_count_det(c4).value - 1 / 16) < 1e-15
    assert abs(tree_count_enum(c4).value - 1 / 16) < 1e-15

    k4 = WeightedGraph(complete_graph(4), np.ones(6))
    assert abs(tree_count_det(k4).value - 16.0) < 1e-9
    assert tree_count_enum(k4).value == 16.0

    disconnected = WeightedGraph(Graph(4, ((0, 1), (2, 3))), np.ones(2))
    assert abs(tree_count_det(disconnected).value) < 1e-12
    assert tree_count_enum(disconnected).value == 0.0


def test_path_and_triangle_closed_forms():
    rng = np.random.default_rng(12)
    for n in (2, 4, 6):
        w = rng.uniform(0.1, 1.0, size=n - 1)
        wg = WeightedGraph(path_graph(n), w)
        assert abs(tree_count_det(wg).value - np.prod(w)) < 1e-12
    a, b, c = 0.3, 0.5, 0.9
    wg = WeightedGraph(complete_graph(3), np.array([a, b, c]))
    expected = a * b + b * c + c * a
    assert abs(tree_count_det(wg).value - expected) < 1e-12
    assert abs(tree_count_enum(wg).value - expected) < 1e-12


def test_single_vertex_counts_one():
    wg = WeightedGraph(Graph(1, ()), np.array([]))
    assert tree_count_det(wg).value == 1.0
    assert tree_count_enum(wg).value == 1.0
    with pytest.raises(EmptyGraph):
        tree_count_det(WeightedGraph(Graph(0, ()), np.array([])))


def test_enumeration_cap():
    big = complete_graph(8)  # 28 edges
    with pytest.raises(TooLarge):
        spanning_trees(big)


def test_methods_agree_and_deletion_is_irrelevant():
    rng = np.random.default_rng(77)
    for _ in range(15):
        g = random_connected_graph(rng, 2, 6)
        w = rng.uniform(0.05, 1.0, size=g.n_edges)
        wg = WeightedGraph(g, w)
        enum = tree_count_enum(wg).value
        values = [tree_count_det(wg, i).value for i in range(g.n_vertices)]
        assert max(values) - min(values) < 1e-10
        assert abs(values[0] - enum) <= 1e-9 * max(1.0, enum)
        assert abs(tree_count_eigen(wg) - enum) <= 1e-8 * max(1.0, enum)


def test_main_theorem_reference_cases():
    report = main_theorem_check(cycle_graph(4), uniform_state(4), _line_spectrum(cycle_graph(4)))
    assert report["is_uniform_commutative"] and report["passed"]
    assert abs(report["lhs"] - 1 / 16) < 1e-9 and abs(report["rhs"] - 1 / 16) < 1e-15

    k4 = complete_graph(4)
    report = main_theorem_check(k4, uniform_state(6), _line_spectrum(k4))
    assert abs(report["lhs"] - 2 / 27) < 1e-9 and report["passed"]

    fig8 = figure_eight_graph()
    state = flat_band_state(fig8).normalized
    report = main_theorem_check(fig8, state, _line_spectrum(fig8))
    assert report["is_uniform_commutative"] and report["passed"]
    assert abs(report["rhs"] - 16 / 8**6) < 1e-18


def test_main_theorem_flags_noncommutative_states():
    g = path_graph(4)
    state = np.array([0.8, 0.36, 0.48], dtype=complex)
    state /= np.linalg.norm(state)
    report = main_theorem_check(g, state, _line_spectrum(g))
    assert not report["is_uniform_commutative"]


def test_main_theorem_preconditions():
    g = Graph(4, ((0, 1), (2, 3)))
    with pytest.raises(Disconnected):
        main_theorem_check(g, uniform_state(2), decompose(np.zeros((2, 2))))
    p4 = path_graph(4)
    with pytest.raises(NotFullSupport):
        main_theorem_check(p4, basis_state(3, 1), _line_spectrum(p4))


def test_bridge_factorization_examples():
    p3 = WeightedGraph(path_graph(3), np.array([0.4, 0.7]))
    report = bridge_factorization_check(p3, 0)
    assert abs(report["whole"] - 0.28) < 1e-12
    assert abs(report["whole"] - report["product"]) < 1e-12

    bowtie = Graph(6, ((0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)))
    wg = WeightedGraph(bowtie, np.ones(7))
    bridge_idx = bowtie.edges.index((2, 3))
    report = bridge_factorization_check(wg, bridge_idx)
    assert abs(report["whole"] - 9.0) < 1e-9
    assert abs(report["product"] - 9.0) < 1e-9

    rng = np.random.default_rng(31)
    tree = path_graph(5)
    w = rng.uniform(0.1, 1.0, size=4)
    for idx in range(4):
        report = bridge_factorization_check(WeightedGraph(tree, w), idx)
        assert abs(report["whole"] - np.prod(w)) < 1e-12
        assert abs(report["whole"] - report["product"]) < 1e-12

    with pytest.raises(NotABridge):
        bridge_factorization_check(WeightedGraph(cycle_graph(4), np.ones(4)), 0)


def test_uniform_optimality_scan():
    report = uniform_optimality_scan(cycle_graph(4), samples=300, seed=5)
    assert report["all_within_bound"] and report["max_ratio"] <= 1.0 + 1e-12
    assert abs(report["uniform_value"] - 1 / 16) < 1e-15

    # weight concentrated on one edge disconnects the rest: count zero
    wg = WeightedGraph(cycle_graph(4), np.array([1.0, 0.0, 0.0, 0.0]))
    assert abs(tree_count_det(wg).value) < 1e-15

    with pytest.raises(Disconnected):
        uniform_optimality_scan(Graph(4, ((0, 1), (2, 3))), samples=5, seed=0)


def test_pure_state_tree_counts_on_paths():
    g = path_graph(4)
    s = _line_spectrum(g)
    assert abs(pure_state_tree_count(g, 0, s).value - 9 / 256) < 1e-12
    assert abs(pure_state_tree_count(g, 1, s).value - 1 / 32) < 1e-12
    assert abs(pure_state_tree_count(g, 2, s).value - 9 / 256) < 1e-12


def test_pure_state_count_matches_phased_averaged_weights():
    g = path_graph(4)
    s = _line_spectrum(g)
    for alpha in (0.0, 1.1, -2.5):
        induced = averaged_induced(s, g, basis_state(3, 1, phase=alpha))
        minor = np.delete(np.delete(induced.laplacian, 0, axis=0), 0, axis=1)
        assert abs(np.linalg.det(minor) - pure_state_tree_count(g, 1, s).value) < 1e-12


def test_spanning_tree_enumeration_is_exhaustive():
    # Cayley's formula on K_5 and a direct cycle count
    assert len(spanning_trees(complete_graph(5))) == 125
    assert len(spanning_trees(cycle_graph(6))) == 6
    assert len(spanning_trees(figure_eight_graph())) == 16


def test_enumeration_matches_determinant_on_all_small_graphs():
    rng = np.random.default_rng(99)
    possible = tuple(itertools.combinations(range(4), 2))
    for k in range(3, len(possible) + 1):
        for subset in itertools.combinations(possible, k):
            g = Graph(4, subset)
            if not is_connected(g):
                continue
            w = rng.uniform(0.1, 1.0, size=g.n_edges)
            wg = WeightedGraph(g, w)
            det_value = tree_count_det(wg).value
            enum_value = tree_count_enum(wg).value
            assert abs(det_value - enum_value) <= 1e-9 * max(1.0, enum_value)
