"""Eigendecomposition with eigenvalue grouping, unitary evolution, and dephasing.

The central object is :class:`Spectrum`: the distinct eigenvalues of a real
symmetric matrix together with the orthogonal projectors onto their
eigenspaces.  Only projectors are exposed, never eigenvector bases, so every
downstream quantity is independent of the basis chosen inside a degenerate
eigenspace.  Grouping nearly equal eigenvalues into one projector matters: a
degenerate level split by floating-point noise would otherwise dephase
incorrectly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, EigensolverFailure, NotSymmetric

DEFAULT_GROUPING_TOL = 1e-8
SYMMETRY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Distinct eigenvalues (increasing) and their orthogonal projectors."""

    distinct_eigenvalues: np.ndarray
    projectors: tuple[np.ndarray, ...]
    dimension: int


def decompose(matrix: np.ndarray, grouping_tol: float = DEFAULT_GROUPING_TOL) -> Spectrum:
    """Spectral decomposition of a real symmetric matrix.

    Consecutive sorted eigenvalues closer than
    ``grouping_tol * max(1, spectral_radius)`` are merged into a single
    eigenspace; the reported eigenvalue is the group mean.
    """
    if grouping_tol <= 0:
        raise ValueError("grouping_tol must be positive")
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"expected a square matrix, got shape {a.shape}")
    if a.size and np.abs(a - a.T).max() > SYMMETRY_TOL:
        raise NotSymmetric("matrix is not symmetric within 1e-12")
    sym = (a + a.T) / 2.0

    try:
        evals, evecs = np.linalg.eigh(sym)
    except np.linalg.LinAlgError as exc:
        raise EigensolverFailure(str(exc)) from exc

    n = a.shape[0]
    if n == 0:
        return Spectrum(np.array([]), (), 0)

    scale = max(1.0, float(np.abs(evals).max()))
    threshold = grouping_tol * scale
    group_ids = np.concatenate(([0], np.cumsum(np.diff(evals) >= threshold)))

    thetas = []
    projectors = []
    for gid in range(group_ids[-1] + 1):
        members = np.flatnonzero(group_ids == gid)
        basis = evecs[:, members]
        proj = basis @ basis.T
        projectors.append((proj + proj.T) / 2.0)
        thetas.append(float(evals[members].mean()))
    return Spectrum(np.array(thetas), tuple(projectors), n)


def evolve(spectrum: Spectrum, t: float) -> np.ndarray:
    """Unitary ``exp(i t A)`` reconstructed from the spectral decomposition."""
    u = np.zeros((spectrum.dimension, spectrum.dimension), dtype=complex)
    for theta, proj in zip(spectrum.distinct_eigenvalues, spectrum.projectors):
        u += np.exp(1j * t * theta) * proj
    return u


def dephase(spectrum: Spectrum, x: np.ndarray) -> np.ndarray:
    """Infinite-time average of ``exp(itA) X exp(-itA)``, in closed form.

    Equals the sum of ``P @ X @ P`` over the spectral projectors ``P``.  The
    map is trace preserving, Hermiticity preserving, and idempotent.
    """
    x = np.asarray(x, dtype=complex)
    n = spectrum.dimension
    if x.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix, got shape {x.shape}")
    out = np.zeros((n, n), dtype=complex)
    for proj in spectrum.projectors:
        out += proj @ x @ proj
    return out


def numeric_time_average(
    spectrum: Spectrum, x: np.ndarray, horizon: float, steps: int
) -> np.ndarray:
    """Trapezoidal approximation of the finite-time average of U(t) X U(t)^dag.

    Averages over ``[0, horizon]`` with ``steps`` equal subintervals.  This is
    the brute-force quadrature oracle for :func:`dephase`; the deviation decays
    like ``1/horizon``.
    """
    if horizon <= 0:
        raise ValueError("horizon must be positive")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    x = np.asarray(x, dtype=complex)
    n = spectrum.dimension
    if x.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix, got shape {x.shape}")

    thetas = spectrum.distinct_eigenvalues
    projs = np.stack(spectrum.projectors).astype(complex)
    dt = horizon / steps
    total = np.zeros((n, n), dtype=complex)
    chunk = 65536
    for lo in range(0, steps + 1, chunk):
        ts = dt * np.arange(lo, min(lo + chunk, steps + 1))
        weights = np.ones(ts.shape)
        if lo == 0:
            weights[0] = 0.5
        if lo + chunk >= steps + 1:
            weights[-1] = 0.5
        phases = np.exp(1j * np.outer(ts, thetas))
        u = np.tensordot(phases, projs, axes=1)
        sandwiched = u @ x @ np.conj(np.swapaxes(u, 1, 2))
        total += np.tensordot(weights, sandwiched, axes=1)
    return total * (dt / horizon)
