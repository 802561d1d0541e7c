"""Small numerical helpers: realification, Hermitian bases, rank decisions."""

from __future__ import annotations

import numpy as np

_SQRT2 = np.sqrt(2.0)


def hermitian_basis(n: int) -> list[np.ndarray]:
    """Orthonormal basis of Hermitian n x n matrices for Re tr(A*B).

    Order: diagonal units, then for each i<j the real pair then the
    imaginary pair.  Deterministic.
    """
    basis = []
    for i in range(n):
        m = np.zeros((n, n), dtype=np.complex128)
        m[i, i] = 1.0
        basis.append(m)
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=np.complex128)
            m[i, j] = 1.0 / _SQRT2
            m[j, i] = 1.0 / _SQRT2
            basis.append(m)
            m = np.zeros((n, n), dtype=np.complex128)
            m[i, j] = 1j / _SQRT2
            m[j, i] = -1j / _SQRT2
            basis.append(m)
    return basis


def hermitian_coords(h: np.ndarray) -> np.ndarray:
    """Coordinates of a Hermitian matrix in the hermitian_basis order."""
    n = h.shape[0]
    out = np.empty(n * n, dtype=np.float64)
    out[:n] = np.real(np.diag(h))
    k = n
    for i in range(n):
        for j in range(i + 1, n):
            out[k] = _SQRT2 * h[i, j].real
            out[k + 1] = _SQRT2 * h[i, j].imag
            k += 2
    return out


def realify(m: np.ndarray) -> np.ndarray:
    """Stack Re over Im, flattened row-major."""
    return np.concatenate([m.real.ravel(), m.imag.ravel()])


def numerical_rank(matrix: np.ndarray, rank_tol: float) -> tuple[int, float, np.ndarray]:
    """Rank with threshold rank_tol * sigma_max; returns (rank, gap, sigma).

    The gap is sigma_rank / sigma_{rank+1}, infinite when the cut falls
    after the last singular value or the trailing value is zero.
    """
    if matrix.size == 0:
        return 0, np.inf, np.zeros(0)
    sigma = np.linalg.svd(matrix, compute_uv=False)
    if sigma.size == 0 or sigma[0] == 0.0:
        return 0, np.inf, sigma
    rank = int(np.sum(sigma > rank_tol * sigma[0]))
    if rank == 0:
        return 0, np.inf, sigma
    if rank >= sigma.size or sigma[rank] == 0.0:
        gap = np.inf
    else:
        gap = float(sigma[rank - 1] / sigma[rank])
    return rank, gap, sigma


def pack_matrices(mats: list[np.ndarray]) -> np.ndarray:
    """Flatten complex matrices to one real vector (per matrix: Re then Im)."""
    if not mats:
        return np.zeros(0)
    return np.concatenate([realify(m) for m in mats])


def unpack_matrices(vec: np.ndarray, templates: list[np.ndarray]) -> list[np.ndarray]:
    out = []
    k = 0
    for t in templates:
        size = t.size
        re = vec[k : k + size].reshape(t.shape)
        im = vec[k + size : k + 2 * size].reshape(t.shape)
        out.append(re + 1j * im)
        k += 2 * size
    return out


def polar_unitary(m: np.ndarray) -> np.ndarray:
    """Unitary factor W V* from the SVD; empty input gives the 0x0 matrix."""
    if m.size == 0:
        return np.zeros(m.shape, dtype=np.complex128)
    w, _, vh = np.linalg.svd(m)
    return w @ vh
