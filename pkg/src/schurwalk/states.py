"""Edge states, Schur states, and the weighted graphs they induce.

An edge state is a unit vector of complex amplitudes over the edges of a
graph, i.e. over the vertices of its line graph.  Walking it for time ``t``
and folding the amplitudes back onto the base graph's vertex pairs gives a
Hermitian matrix supported on the edges with zero diagonal: the Schur state.
The entrywise modulus square of that matrix is a nonnegative edge weighting.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, GraphMismatch, NotNormalized
from .graphs import Graph, tensor_product
from .spectral import Spectrum, evolve

NORM_TOL = 1e-12


def edge_state(amplitudes: np.ndarray) -> np.ndarray:
    """Validated copy of an amplitude vector; must already have unit norm.

    Non-normalized input is rejected rather than rescaled, so a caller bug
    cannot hide behind silent renormalization.
    """
    vec = np.asarray(amplitudes, dtype=complex).copy()
    if vec.ndim != 1:
        raise DimensionMismatch(f"expected a vector, got shape {vec.shape}")
    norm_sq = float(np.sum(np.abs(vec) ** 2))
    if abs(norm_sq - 1.0) > NORM_TOL:
        raise NotNormalized(f"squared norm is {norm_sq!r}, expected 1")
    return vec


def basis_state(m: int, q: int, phase: float = 0.0) -> np.ndarray:
    """Pure state on edge ``q``, optionally carrying a global phase."""
    if not 0 <= q < m:
        raise DimensionMismatch(f"edge index {q} out of range for {m} edges")
    vec = np.zeros(m, dtype=complex)
    vec[q] = np.exp(1j * phase)
    return vec


def uniform_state(m: int, phase: float = 0.0) -> np.ndarray:
    """Equal-amplitude superposition over all ``m`` edges."""
    if m < 1:
        raise DimensionMismatch("need at least one edge")
    return np.full(m, np.exp(1j * phase) / np.sqrt(m), dtype=complex)


@dataclass(frozen=True, eq=False)
class SchurState:
    """Hermitian matrix of walk amplitudes, supported on the base graph's edges."""

    entries: np.ndarray
    base_graph: Graph


@dataclass(frozen=True, eq=False)
class InducedWeightedGraph:
    """Real-weighted adjacency and Laplacian extracted from a Schur state."""

    adjacency: np.ndarray
    laplacian: np.ndarray


def schur_state(g: Graph, e: np.ndarray, t: float, spectrum: Spectrum) -> SchurState:
    """Schur state of edge state ``e`` walked for time ``t`` on the line graph.

    ``spectrum`` must decompose the adjacency matrix of ``line_graph(g)``.
    For each edge ``{v, w}`` with ``v < w`` the walked amplitude on that edge
    is stored at ``[v, w]`` and its conjugate at ``[w, v]``; all other entries
    are zero.
    """
    vec = edge_state(e)
    m = g.n_edges
    if vec.shape != (m,):
        raise DimensionMismatch(f"state has {vec.shape[0]} amplitudes, graph has {m} edges")
    if spectrum.dimension != m:
        raise DimensionMismatch(
            f"spectrum dimension {spectrum.dimension} does not match {m} edges"
        )
    amps = evolve(spectrum, t) @ vec
    entries = np.zeros((g.n_vertices, g.n_vertices), dtype=complex)
    for idx, (u, v) in enumerate(g.edges):
        entries[u, v] = amps[idx]
        entries[v, u] = np.conj(amps[idx])
    return SchurState(entries, g)


def schur_inner(first: SchurState, second: SchurState) -> complex:
    """Inner product ``Tr(M^dag N)`` of two Schur states on the same graph."""
    if first.base_graph != second.base_graph:
        raise GraphMismatch("Schur states live on different base graphs")
    value = complex(np.vdot(first.entries, second.entries))
    # Same number via the all-ones bilinear form over conj(M) * N, entrywise.
    ones = np.ones(first.base_graph.n_vertices)
    assert abs(value - complex(ones @ (np.conj(first.entries) * second.entries) @ ones)) < 1e-12
    return value


def induced_from_adjacency(adjacency: np.ndarray) -> InducedWeightedGraph:
    """Weighted Laplacian companion of a symmetric nonnegative adjacency."""
    adj = np.asarray(adjacency, dtype=float)
    degrees = adj.sum(axis=1)
    return InducedWeightedGraph(adj, np.diag(degrees) - adj)


def induced_graph(state: SchurState) -> InducedWeightedGraph:
    """Entrywise modulus-squared weights of a Schur state, plus their Laplacian.

    The total weight over all ordered vertex pairs is 2 for a Schur state
    built from a normalized edge state, and the Laplacian rows sum to zero by
    construction.
    """
    return induced_from_adjacency(np.abs(state.entries) ** 2)


def schur_tensor(first: SchurState, second: SchurState) -> SchurState:
    """Kronecker product of two Schur states on the tensor product of their graphs."""
    product_graph = tensor_product(first.base_graph, second.base_graph)
    return SchurState(np.kron(first.entries, second.entries), product_graph)


def schur_state_to_json(state: SchurState) -> str:
    """Serialize as ``{"n": ..., "entries": [[v, w, re, im], ...]}`` with v < w."""
    rows = []
    for u, v in state.base_graph.edges:
        z = state.entries[u, v]
        rows.append([u, v, float(z.real), float(z.imag)])
    return json.dumps({"entries": rows, "n": state.base_graph.n_vertices}, sort_keys=True)


def schur_state_from_json(text: str) -> SchurState:
    """Inverse of :func:`schur_state_to_json`; listed pairs become the edges."""
    data = json.loads(text)
    n = int(data["n"])
    edges = tuple((int(row[0]), int(row[1])) for row in data["entries"])
    g = Graph(n, edges)
    entries = np.zeros((n, n), dtype=complex)
    for v, w, re, im in data["entries"]:
        entries[int(v), int(w)] = complex(re, im)
        entries[int(w), int(v)] = complex(re, -im)
    return SchurState(entries, g)
