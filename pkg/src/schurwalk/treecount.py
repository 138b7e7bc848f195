"""Weighted spanning-tree counts: determinant route, enumeration oracle, and checks.

The determinant route is the matrix-tree theorem: any principal minor of the
weighted Laplacian.  The enumeration route walks every (n-1)-edge subset and
keeps the spanning trees; it is the independently trustworthy oracle and is
capped at 24 edges.  A single-vertex graph counts 1 (the empty product), which
the bridge factorization relies on when a bridge endpoint is a leaf.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    Disconnected,
    EmptyGraph,
    NotABridge,
    NotFullSupport,
    TooLarge,
)
from .graphs import (
    Graph,
    WeightedGraph,
    bridges,
    connected_components,
    is_connected,
    subgraph_on_vertices,
)
from .mixing import average_mixing, averaged_induced
from .spectral import Spectrum
from .states import edge_state

MAX_ENUM_EDGES = 24


@dataclass(frozen=True)
class TreeCount:
    value: float
    method: str  # "determinant" or "enumeration"


def weighted_laplacian(wg: WeightedGraph) -> np.ndarray:
    n = wg.graph.n_vertices
    lap = np.zeros((n, n))
    for (u, v), w in zip(wg.graph.edges, wg.weights):
        lap[u, v] -= w
        lap[v, u] -= w
        lap[u, u] += w
        lap[v, v] += w
    return lap


def tree_count_det(wg: WeightedGraph, deleted_index: int = 0) -> TreeCount:
    """Weighted spanning-tree count as a principal minor of the Laplacian.

    The result does not depend on ``deleted_index``; a disconnected graph
    gives (numerically) zero.
    """
    n = wg.graph.n_vertices
    if n == 0:
        raise EmptyGraph("graph has no vertices")
    if not 0 <= deleted_index < n:
        raise ValueError(f"deleted_index {deleted_index} out of range")
    lap = weighted_laplacian(wg)
    minor = np.delete(np.delete(lap, deleted_index, axis=0), deleted_index, axis=1)
    return TreeCount(float(np.linalg.det(minor)), "determinant")


def tree_count_eigen(wg: WeightedGraph) -> float:
    """Cross-check form: product of the nonzero Laplacian eigenvalues over n."""
    n = wg.graph.n_vertices
    if n == 0:
        raise EmptyGraph("graph has no vertices")
    evals = np.linalg.eigvalsh(weighted_laplacian(wg))
    return float(np.prod(evals[1:]) / n)


def spanning_trees(g: Graph) -> list[tuple[int, ...]]:
    """All spanning trees as tuples of edge indices (exhaustive, m <= 24)."""
    if g.n_vertices == 0:
        raise EmptyGraph("graph has no vertices")
    if g.n_edges > MAX_ENUM_EDGES:
        raise TooLarge(f"{g.n_edges} edges exceeds the enumeration cap {MAX_ENUM_EDGES}")
    n = g.n_vertices
    trees = []
    for subset in itertools.combinations(range(g.n_edges), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        joins = 0
        for idx in subset:
            u, v = g.edges[idx]
            ru, rv = find(u), find(v)
            if ru == rv:
                break
            parent[ru] = rv
            joins += 1
        if joins == n - 1:
            trees.append(subset)
    return trees


def tree_count_enum(wg: WeightedGraph) -> TreeCount:
    """Enumeration oracle: sum of weight products over all spanning trees."""
    total = 0.0
    for tree in spanning_trees(wg.graph):
        product = 1.0
        for idx in tree:
            product *= wg.weights[idx]
        total += product
    return TreeCount(total, "enumeration")


def main_theorem_check(g: Graph, e: np.ndarray, spectrum: Spectrum) -> dict:
    """Compare the tree count of the time-averaged weighted graph with the target.

    ``lhs`` is the spanning-tree count of the averaged induced graph of ``e``;
    ``rhs`` is the unit-weight count scaled by ``m**-(n-1)``.  The two agree
    whenever ``e`` is uniform commutative with full support.
    """
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    vec = edge_state(e)
    if vec.shape != (g.n_edges,):
        raise DimensionMismatch(
            f"state has {vec.shape[0]} amplitudes, graph has {g.n_edges} edges"
        )
    if np.abs(vec).min() <= 1e-12:
        raise NotFullSupport("state amplitude vanishes on some edge")

    induced = averaged_induced(spectrum, g, vec)
    minor = np.delete(np.delete(induced.laplacian, 0, axis=0), 0, axis=1)
    lhs = float(np.linalg.det(minor))

    n, m = g.n_vertices, g.n_edges
    unit = tree_count_det(WeightedGraph(g, np.ones(m))).value
    rhs = unit / m ** (n - 1)

    moduli = np.abs(vec)
    uniform = bool(np.abs(moduli - moduli[0]).max() < 1e-9)
    image = np.zeros(m, dtype=complex)
    for theta, proj in zip(spectrum.distinct_eigenvalues, spectrum.projectors):
        image += theta * (proj @ vec)
    lam = float(np.real(np.vdot(vec, image)))
    commutative = bool(np.linalg.norm(image - lam * vec) < 1e-8)

    return {
        "lhs": lhs,
        "rhs": rhs,
        "is_uniform_commutative": uniform and commutative,
        "passed": bool(abs(lhs - rhs) < 1e-9),
    }


def bridge_factorization_check(wg: WeightedGraph, bridge_index: int) -> dict:
    """Whole-graph count versus bridge weight times the two component counts."""
    g = wg.graph
    if bridge_index not in bridges(g):
        raise NotABridge(f"edge {bridge_index} is not a bridge")
    whole = tree_count_det(wg).value

    reduced = Graph(g.n_vertices, g.edges[:bridge_index] + g.edges[bridge_index + 1 :])
    components = connected_components(reduced)
    u, v = g.edges[bridge_index]
    side_u = next(c for c in components if u in c)
    side_v = next(c for c in components if v in c)
    product = wg.weights[bridge_index]
    for side in (side_u, side_v):
        sub, edge_map = subgraph_on_vertices(g, side)
        product *= tree_count_det(WeightedGraph(sub, wg.weights[edge_map])).value
    return {"whole": whole, "product": float(product)}


def uniform_optimality_scan(g: Graph, samples: int, seed: int) -> dict:
    """Seeded random search for a simplex weight vector beating the uniform one.

    Samples uniformly from the weight simplex (normalized exponentials) and
    records the largest observed ratio against the uniform-weight count; no
    sample should exceed it.
    """
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    m = g.n_edges
    rng = np.random.default_rng(seed)
    uniform_value = tree_count_det(WeightedGraph(g, np.full(m, 1.0 / m))).value
    max_ratio = 0.0
    all_within = True
    for _ in range(samples):
        w = rng.exponential(size=m)
        w /= w.sum()
        value = tree_count_det(WeightedGraph(g, w)).value
        if value > uniform_value + 1e-12:
            all_within = False
        max_ratio = max(max_ratio, value / uniform_value)
    return {
        "samples": samples,
        "seed": seed,
        "uniform_value": uniform_value,
        "max_ratio": max_ratio,
        "all_within_bound": all_within,
    }


def pure_state_tree_count(g: Graph, q: int, spectrum: Spectrum) -> TreeCount:
    """Tree count under the weights a pure state on edge ``q`` averages to.

    The weight of edge ``p`` is entry ``[p, q]`` of the average mixing matrix;
    a global phase on the state would not change it.
    """
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    if not 0 <= q < g.n_edges:
        raise ValueError(f"edge index {q} out of range")
    weights = average_mixing(spectrum)[:, q]
    wg = WeightedGraph(g, weights)
    result = tree_count_det(wg)
    if g.n_edges <= MAX_ENUM_EDGES:
        oracle = tree_count_enum(wg).value
        assert abs(result.value - oracle) <= 1e-9 * max(1.0, abs(oracle))
    return result
