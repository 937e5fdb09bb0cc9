"""
Vectorized f1 / f2 evaluation over F_p for batches of kernel points.

Points are int64 arrays of shape (n, 20) with entries in [0, p). The phi
entries are evaluated from the shared PHI_TABLE, so the kernels agree with
the exact scalar implementation by construction.
"""
from typing import Tuple

import numpy as np

from src.domain.invariants.phi import PHI_TABLE
from src.domain.scalars.fields import prime_field
from src.domain.wedge.contraction import kernel_basis


def kernel_matrix(p: int) -> np.ndarray:
    """A basis of ker(psi) over F_p as a (14, 20) integer array."""
    basis = kernel_basis(prime_field(p))
    return np.array([[int(c) for c in vec] for vec in basis], dtype=np.int64)


def coefficient_block(p: int, start: int, stop: int, dim: int = 14) -> np.ndarray:
    """Base-p digits of the indices start..stop-1, one row per index."""
    idx = np.arange(start, stop, dtype=np.int64)
    powers = p ** np.arange(dim, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % p


def points_block(kernel: np.ndarray, p: int, start: int, stop: int) -> np.ndarray:
    return coefficient_block(p, start, stop, kernel.shape[0]) @ kernel % p


def _phi_entry(points: np.ndarray, p: int, key: Tuple[int, int]) -> np.ndarray:
    acc = np.zeros(points.shape[0], dtype=np.int64)
    for a, b, c in PHI_TABLE[key]:
        acc += c * points[:, a] * points[:, b]
    return acc % p


def phi_batch(points: np.ndarray, p: int) -> np.ndarray:
    """phi(x) for every row, as an (n, 6, 6) array mod p."""
    out = np.empty((points.shape[0], 6, 6), dtype=np.int64)
    for i in range(6):
        for j in range(6):
            out[:, i, j] = _phi_entry(points, p, (i + 1, j + 1))
    return out


def f1_batch(points: np.ndarray, p: int) -> np.ndarray:
    """f1 = -f/4 where f = (phi^2)_11; only the first row and column of phi are needed."""
    row = [_phi_entry(points, p, (1, k)) for k in range(1, 7)]
    col = [_phi_entry(points, p, (k, 1)) for k in range(1, 7)]
    f = sum(r * c for r, c in zip(row, col)) % p
    minus_quarter = (-pow(4, -1, p)) % p
    return f * minus_quarter % p


def f2_gram_batch(phi: np.ndarray, p: int) -> np.ndarray:
    """G = -(1/4)(M + M^t) with M = M_J phi, so that f2 = v^t G v."""
    m = np.concatenate([phi[:, 3:, :], -phi[:, :3, :]], axis=1)
    minus_quarter = (-pow(4, -1, p)) % p
    return (m + np.transpose(m, (0, 2, 1))) * minus_quarter % p


def det_mod_batch(mats: np.ndarray, p: int) -> np.ndarray:
    """Determinants mod p of a stack of square matrices by batched elimination."""
    a = mats.copy() % p
    n, size, _ = a.shape
    det = np.ones(n, dtype=np.int64)
    inverses = np.array([0] + [pow(k, -1, p) for k in range(1, p)], dtype=np.int64)
    rows = np.arange(n)
    for c in range(size):
        nonzero = a[:, c:, c] != 0
        has_pivot = nonzero.any(axis=1)
        det[~has_pivot] = 0
        piv = c + np.argmax(nonzero, axis=1)
        swap = has_pivot & (piv != c)
        if swap.any():
            r = rows[swap]
            top = a[r, c, :].copy()
            a[r, c, :] = a[r, piv[swap], :]
            a[r, piv[swap], :] = top
            det[swap] = (-det[swap]) % p
        pivot = a[:, c, c]
        det = det * pivot % p
        factor = a[:, c + 1:, c] * inverses[pivot][:, None] % p
        a[:, c + 1:, :] = (a[:, c + 1:, :] - factor[:, :, None] * a[:, c, None, :]) % p
    return det


def legendre_table(p: int) -> np.ndarray:
    """chi(a) for a in [0, p): 0, +1 or -1."""
    table = np.full(p, -1, dtype=np.int64)
    table[0] = 0
    for x in range(1, p):
        table[x * x % p] = 1
    return table


def all_vectors(p: int, dim: int = 6) -> np.ndarray:
    return coefficient_block(p, 0, p ** dim, dim)


def quadratic_values(grams: np.ndarray, vectors: np.ndarray, p: int) -> np.ndarray:
    """v^t G v mod p for every gram and every vector: shape (n_grams, n_vectors)."""
    gv = np.einsum("nij,vj->nvi", grams, vectors) % p
    return np.einsum("nvi,vi->nv", gv, vectors) % p
