"""Complex vectors, the bilinear dot product and determinants.

Vectors are plain ``numpy`` arrays of dtype ``complex128``; matrices are
square 2-D arrays whose *rows* are the vectors. Note that ``dot`` is the
bilinear pairing ``sum(a_i * b_i)`` with no conjugation. Hermitian pairings
are always written out explicitly with ``np.conj``.
"""

from __future__ import annotations

import numpy as np

from .errors import ContractError, OracleSizeError

ORACLE_MAX_SIZE = 6


def as_vector(x) -> np.ndarray:
    """Coerce ``x`` to a finite 1-D complex128 array (a CVector)."""
    v = np.asarray(x, dtype=np.complex128)
    if v.ndim != 1 or v.size == 0:
        raise ContractError(f"expected a non-empty 1-D vector, got shape {v.shape}")
    if not np.all(np.isfinite(v)):
        raise ContractError("vector has non-finite entries")
    return v


def as_vectors(xs) -> np.ndarray:
    """Stack a family of equal-length vectors into a 2-D array, one per row."""
    if isinstance(xs, np.ndarray) and xs.ndim == 2:
        V = xs.astype(np.complex128, copy=False)
        if V.shape[0] == 0 or V.shape[1] == 0:
            raise ContractError("empty vector family")
        if not np.isfinite(V).all():
            raise ContractError("vector family has non-finite entries")
        return V
    rows = [as_vector(x) for x in xs]
    if not rows:
        raise ContractError("empty vector family")
    m = rows[0].size
    if any(r.size != m for r in rows):
        raise ContractError("vectors have mixed dimensions")
    return np.stack(rows)


def as_matrix(M) -> np.ndarray:
    A = np.asarray(M, dtype=np.complex128)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ContractError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ContractError("matrix has non-finite entries")
    return A


def basis_vector(m: int, i: int) -> np.ndarray:
    e = np.zeros(m, dtype=np.complex128)
    e[i] = 1.0
    return e


def dot(a, b) -> complex:
    """Bilinear dot product ``sum_i a_i b_i`` (no conjugation)."""
    a = as_vector(a)
    b = as_vector(b)
    if a.size != b.size:
        raise ContractError(f"dimension mismatch: {a.size} vs {b.size}")
    return complex(np.sum(a * b))


def herm_norm(a) -> float:
    """Hermitian norm ``sqrt(a . conj(a))``."""
    a = np.abs(as_vector(a))
    top = a.max()
    if top == 0.0 or not np.isfinite(top):
        return float(top)
    # rescale so tiny or huge entries neither underflow nor overflow when squared
    return float(top * np.sqrt(np.sum((a / top) ** 2)))


def batched_determinant(A: np.ndarray) -> np.ndarray:
    """Determinants of a stack of square matrices, shape ``(..., k, k)``.

    Gaussian elimination with row pivoting on the largest modulus in the
    current column. Singular matrices give 0.
    """
    A = np.array(A, dtype=np.complex128)
    *batch, k, k2 = A.shape
    if k != k2:
        raise ContractError("matrices must be square")
    a = A.reshape(-1, k, k)
    B = a.shape[0]
    if k == 1:
        return a[:, 0, 0].reshape(batch)
    idx = np.arange(B)
    sign = np.ones(B)
    singular = np.zeros(B, dtype=bool)
    for col in range(k):
        piv = col + np.argmax(np.abs(a[:, col:, col]), axis=1)
        swap = piv != col
        if np.any(swap):
            top = a[idx, col].copy()
            a[idx, col] = a[idx, piv]
            a[idx, piv] = top
            sign[swap] = -sign[swap]
        p = a[:, col, col]
        zero = p == 0
        singular |= zero
        if col + 1 < k:
            f = a[:, col + 1:, col] / np.where(zero, 1.0, p)[:, None]
            a[:, col + 1:, col:] -= f[:, :, None] * a[:, None, col, col:]
    det = sign * np.prod(np.diagonal(a, axis1=1, axis2=2), axis=1)
    det[singular] = 0.0
    return det.reshape(batch)


def determinant(M) -> complex:
    """Determinant by pivoted row elimination. Exact for 1x1 matrices."""
    A = as_matrix(M)
    if A.shape[0] == 1:
        return complex(A[0, 0])
    return complex(batched_determinant(A))


def determinant_cofactor(M) -> complex:
    """Determinant by recursive cofactor expansion along the first row.

    Independent check on :func:`determinant`; factorial cost, so limited to
    matrices of size at most 6.
    """
    A = as_matrix(M)
    if A.shape[0] > ORACLE_MAX_SIZE:
        raise OracleSizeError(f"cofactor oracle limited to size <= {ORACLE_MAX_SIZE}")
    rows = [[complex(z) for z in row] for row in A]
    return _cofactor(rows)


def _cofactor(rows: list[list[complex]]) -> complex:
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0j
    for c in range(k):
        if rows[0][c] == 0:
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = rows[0][c] * _cofactor(minor)
        total += -term if c % 2 else term
    return total


def rel_err(a, b) -> float:
    """Relative deviation ``|a - b| / |b|`` for scalars or vectors."""
    diff = float(np.linalg.norm(np.atleast_1d(np.asarray(a) - np.asarray(b))))
    scale = float(np.linalg.norm(np.atleast_1d(np.asarray(b))))
    if scale == 0.0:
        return diff if diff > 0 else 0.0
    return diff / scale


