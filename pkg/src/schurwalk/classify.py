"""Commutativity tests, the disorder classifier, and flat-band state construction.

The classifier sorts a density matrix on the edge space into one of four
verdicts.  A state moved by dephasing is non-commutative.  A fixed point whose
averaged edge weights are all within tolerance of ``1/m`` is uniform
commutative, confirmed by a spanning-tree cross-check; if the cross-check
fails the verdict is an explicit anomaly rather than a silent retry.  Any
other fixed point is weighted commutative.

The flat-band constructor realizes uniform commutative states on non-regular
line graphs: alternating signs along a closed Eulerian trail of the base
graph lie in the kernel of the incidence matrix, hence form an eigenvector of
the line graph's adjacency with eigenvalue -2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadEpsilon,
    DimensionMismatch,
    Disconnected,
    EmptyGraph,
    OddDegreeVertex,
    OddEdgeCount,
)
from .graphs import (
    Graph,
    WeightedGraph,
    adjacency_matrix,
    edge_induced_subgraph,
    eulerian_trail,
    incidence_matrix,
    is_connected,
    line_graph,
)
from .spectral import Spectrum, dephase
from .treecount import tree_count_det

DEFAULT_EPSILON = 1e-7

NON_COMMUTATIVE = "NonCommutative"
WEIGHTED_COMMUTATIVE = "WeightedCommutative"
UNIFORM_COMMUTATIVE = "UniformCommutative"
ANOMALY = "Anomaly"


@dataclass(frozen=True, eq=False)
class Classification:
    verdict: str
    support_size: int
    support_vertices: int
    support_edges: tuple[int, ...]
    weights: np.ndarray
    epsilon: float
    detail: str


@dataclass(frozen=True, eq=False)
class FlatBandState:
    """Signed edge labeling in the incidence kernel, plus its normalized state."""

    signs: np.ndarray
    normalized: np.ndarray


def commutator_norm(matrix: np.ndarray, rho: np.ndarray) -> float:
    """Frobenius norm of ``A rho - rho A``."""
    a = np.asarray(matrix, dtype=complex)
    r = np.asarray(rho, dtype=complex)
    if a.shape != r.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"incompatible shapes {a.shape} and {r.shape}")
    return float(np.linalg.norm(a @ r - r @ a))


def is_eigenvector(matrix: np.ndarray, vector: np.ndarray, tol: float = 1e-8) -> float | None:
    """Rayleigh-quotient eigenvalue of a unit vector, or None above tolerance.

    For pure states this is the commutativity criterion: ``|v><v|`` commutes
    with a Hermitian matrix exactly when ``v`` is one of its eigenvectors.
    """
    a = np.asarray(matrix, dtype=complex)
    v = np.asarray(vector, dtype=complex)
    lam = float(np.real(np.vdot(v, a @ v)))
    residual = float(np.linalg.norm(a @ v - lam * v))
    return lam if residual < tol else None


def classify(
    rho: np.ndarray, g: Graph, spectrum: Spectrum, epsilon: float = DEFAULT_EPSILON
) -> Classification:
    """Disorder classification of a density matrix on the edge space of ``g``.

    The infinite-time average is computed in closed form via dephasing, so the
    test against the fixed-point condition is exact up to ``epsilon``.
    """
    if epsilon <= 0:
        raise BadEpsilon(f"epsilon must be positive, got {epsilon!r}")
    mat = np.asarray(rho, dtype=complex)
    m = g.n_edges
    if mat.shape != (m, m):
        raise DimensionMismatch(f"expected a {m}x{m} density matrix, got shape {mat.shape}")
    if spectrum.dimension != m:
        raise DimensionMismatch(
            f"spectrum dimension {spectrum.dimension} does not match {m} edges"
        )

    rho_hat = dephase(spectrum, mat)
    drift = float(np.linalg.norm(rho_hat - mat))
    all_weights = rho_hat.diagonal().real
    support = [idx for idx in range(m) if all_weights[idx] > epsilon]
    weights = all_weights[support]
    sub, _, edge_map = edge_induced_subgraph(g, support)
    m_rho = len(support)
    n_rho = sub.n_vertices

    def result(verdict: str, detail: str) -> Classification:
        return Classification(
            verdict, m_rho, n_rho, tuple(support), weights, epsilon, detail
        )

    if drift > epsilon:
        return result(
            NON_COMMUTATIVE,
            f"dephasing moved the state: drift {drift:.6e} exceeds epsilon",
        )
    if m_rho == 0:
        return result(ANOMALY, "support is empty at this epsilon")

    deviation = float(np.abs(weights - 1.0 / m_rho).max())
    if deviation < epsilon:
        sub_weights = all_weights[edge_map]
        lhs = tree_count_det(WeightedGraph(sub, sub_weights)).value
        unit = tree_count_det(WeightedGraph(sub, np.ones(m_rho))).value
        rhs = unit / m_rho ** (n_rho - 1)
        if abs(lhs - rhs) < epsilon:
            return result(
                UNIFORM_COMMUTATIVE,
                f"weight 1/{m_rho} on support {support}; "
                f"tree-count cross-check residual {abs(lhs - rhs):.3e}",
            )
        return result(
            ANOMALY,
            f"weights look uniform but the tree-count cross-check fails: "
            f"|{lhs!r} - {rhs!r}| >= epsilon",
        )
    return result(
        WEIGHTED_COMMUTATIVE,
        f"weights vary on support {support}: max deviation {deviation:.6e} from 1/{m_rho}",
    )


def flat_band_state(h: Graph) -> FlatBandState:
    """Alternating-sign state along a closed Eulerian trail of ``h``.

    Requires ``h`` connected with every degree even and an even number of
    edges.  The signs sum to zero around every vertex, so they lie in the
    kernel of the incidence matrix and form an exact integer eigenvector of
    the line graph's adjacency with eigenvalue -2; dividing by ``sqrt(m)``
    gives a uniform commutative state.
    """
    m = h.n_edges
    if m == 0:
        raise EmptyGraph("graph has no edges")
    odd = np.flatnonzero(h.degrees() % 2)
    if odd.size:
        raise OddDegreeVertex(f"vertices {odd.tolist()} have odd degree")
    if m % 2:
        raise OddEdgeCount(f"{m} edges; an even count is required")
    if not is_connected(h):
        raise Disconnected("graph is not connected")

    trail = eulerian_trail(h)
    signs = np.zeros(m, dtype=int)
    for position, edge_idx in enumerate(trail):
        signs[edge_idx] = 1 if position % 2 == 0 else -1

    vertex_sums = incidence_matrix(h) @ signs
    assert not vertex_sums.any(), "trail signs do not cancel at every vertex"
    image = adjacency_matrix(line_graph(h)) @ signs
    assert (image == -2 * signs).all(), "signs are not a -2 eigenvector"

    return FlatBandState(signs, signs / np.sqrt(m) + 0j)


def line_graph_spectral_floor(g: Graph, spectrum: Spectrum) -> float:
    """Smallest adjacency eigenvalue; below -2 certifies a non-line-graph."""
    if spectrum.dimension != g.n_vertices:
        raise DimensionMismatch(
            f"spectrum dimension {spectrum.dimension} does not match {g.n_vertices} vertices"
        )
    return float(spectrum.distinct_eigenvalues[0])


def classification_to_json(c: Classification) -> str:
    return json.dumps(
        {
            "detail": c.detail,
            "epsilon": float(c.epsilon),
            "m_rho": int(c.support_size),
            "n_rho": int(c.support_vertices),
            "verdict": c.verdict,
            "weights": [float(w) for w in c.weights],
        },
        sort_keys=True,
    )
