"""Average mixing matrices and time-averaged states.

Everything here is an infinite-time average, computed exactly from spectral
projectors rather than by integrating; the quadrature route exists only as a
test oracle (see :func:`schurwalk.spectral.numeric_time_average`).
"""

from __future__ import annotations

import json

import numpy as np

from .errors import DimensionMismatch
from .graphs import Graph
from .spectral import Spectrum, dephase
from .states import InducedWeightedGraph, edge_state, induced_from_adjacency


def average_mixing(spectrum: Spectrum) -> np.ndarray:
    """Average mixing matrix: sum of the entrywise squares of the projectors.

    Real, symmetric, doubly stochastic, positive semidefinite, and entrywise
    nonnegative.
    """
    n = spectrum.dimension
    out = np.zeros((n, n))
    for proj in spectrum.projectors:
        out += proj * proj
    return out


def averaged_density(spectrum: Spectrum, e: np.ndarray) -> np.ndarray:
    """Time-averaged density matrix of the pure state ``|e><e|``."""
    vec = edge_state(e)
    if vec.shape != (spectrum.dimension,):
        raise DimensionMismatch(
            f"state has {vec.shape[0]} amplitudes, spectrum dimension is {spectrum.dimension}"
        )
    return dephase(spectrum, np.outer(vec, vec.conj()))


def averaged_induced(spectrum: Spectrum, g: Graph, e: np.ndarray) -> InducedWeightedGraph:
    """Time-averaged induced weighted graph of an edge state.

    The weight of edge ``{v, w}`` is the corresponding diagonal entry of the
    averaged density matrix, placed symmetrically; the Laplacian follows from
    the row sums.
    """
    if g.n_edges != spectrum.dimension:
        raise DimensionMismatch(
            f"graph has {g.n_edges} edges, spectrum dimension is {spectrum.dimension}"
        )
    rho_hat = averaged_density(spectrum, e)
    weights = rho_hat.diagonal().real
    adj = np.zeros((g.n_vertices, g.n_vertices))
    for idx, (u, v) in enumerate(g.edges):
        adj[u, v] = weights[idx]
        adj[v, u] = weights[idx]
    return induced_from_adjacency(adj)


def path_mixing_closed_form(n: int) -> np.ndarray:
    """Average mixing matrix of the line graph of the n-vertex path, in closed form.

    The line graph is the (n-1)-vertex path and its mixing matrix is
    ``(2J + I + T) / (2n)`` where ``T`` is the index-reversal permutation.
    Diagonal entries are ``3/(2n)``, except ``2/n`` at the central edge when
    ``n`` is even.
    """
    if n < 2:
        raise ValueError("need a path with at least one edge")
    size = n - 1
    reversal = np.fliplr(np.eye(size))
    return (2 * np.ones((size, size)) + np.eye(size) + reversal) / (2 * n)


def mixing_to_json(matrix: np.ndarray) -> str:
    """Serialize a mixing matrix as ``{"m": ..., "rows": [[...], ...]}``."""
    arr = np.asarray(matrix, dtype=float)
    return json.dumps(
        {"m": int(arr.shape[0]), "rows": [[float(x) for x in row] for row in arr]},
        sort_keys=True,
    )
