"""Exterior powers of C^m with dense coefficient storage.

A blade of grade k in ambient dimension m stores C(m, k) coefficients, one
per k-subset of {0, ..., m-1} in lexicographic order. The coordinate blades
e_S are declared orthonormal, so both the bilinear and the Hermitian
pairings are plain coefficient sums.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import NamedTuple

import numpy as np

from .algebra import as_vectors, batched_determinant, herm_norm
from .config import DEFAULT_TOL, Tolerances
from .errors import ContractError, GradeError

LEIBNIZ_MAX_GRADE = 4


@lru_cache(maxsize=None)
def subsets(m: int, k: int) -> tuple[tuple[int, ...], ...]:
    """All k-subsets of range(m) in lexicographic order."""
    return tuple(itertools.combinations(range(m), k))


def rank_subset(S, m: int) -> int:
    """Position of the sorted subset ``S`` in ``subsets(m, len(S))``."""
    k = len(S)
    r = 0
    prev = -1
    for pos, s in enumerate(S):
        for skipped in range(prev + 1, s):
            r += comb(m - skipped - 1, k - pos - 1)
        prev = s
    return r


def unrank_subset(r: int, m: int, k: int) -> tuple[int, ...]:
    """Inverse of :func:`rank_subset`."""
    out = []
    start = 0
    for pos in range(k):
        for s in range(start, m):
            block = comb(m - s - 1, k - pos - 1)
            if r < block:
                out.append(s)
                start = s + 1
                break
            r -= block
    return tuple(out)


@dataclass(frozen=True)
class Blade:
    """An element of the k-th exterior power of C^m."""

    ambient_dim: int
    grade: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128).reshape(-1)
        if not 0 <= self.grade <= self.ambient_dim:
            raise GradeError(f"grade {self.grade} outside [0, {self.ambient_dim}]")
        if c.size != comb(self.ambient_dim, self.grade):
            raise ContractError(
                f"expected {comb(self.ambient_dim, self.grade)} coefficients, got {c.size}"
            )
        if not np.all(np.isfinite(c)):
            raise ContractError("blade has non-finite coefficients")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def basis(cls, m: int, S) -> "Blade":
        S = tuple(sorted(S))
        c = np.zeros(comb(m, len(S)), dtype=np.complex128)
        c[rank_subset(S, m)] = 1.0
        return cls(m, len(S), c)

    def coeff(self, S) -> complex:
        return complex(self.coeffs[rank_subset(tuple(sorted(S)), self.ambient_dim)])

    def __neg__(self):
        return Blade(self.ambient_dim, self.grade, -self.coeffs)

    def __add__(self, other: "Blade"):
        _check_same_space(self, other)
        return Blade(self.ambient_dim, self.grade, self.coeffs + other.coeffs)

    def __mul__(self, alpha: complex):
        return Blade(self.ambient_dim, self.grade, self.coeffs * alpha)

    __rmul__ = __mul__


def _check_same_space(x: Blade, y: Blade) -> None:
    if x.ambient_dim != y.ambient_dim or x.grade != y.grade:
        raise ContractError(
            f"blades live in different spaces: (m={x.ambient_dim}, k={x.grade}) "
            f"vs (m={y.ambient_dim}, k={y.grade})"
        )


@lru_cache(maxsize=None)
def _permutations_with_sign(k: int):
    perms = np.array(list(itertools.permutations(range(k))), dtype=np.intp)
    signs = np.array([_perm_sign(p) for p in perms], dtype=np.float64)
    return perms, signs


def _perm_sign(p) -> int:
    p = list(p)
    sign = 1
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _leibniz_det(A: np.ndarray) -> np.ndarray:
    # A: (B, k, k); sum over permutations of signed diagonal products
    k = A.shape[-1]
    perms, signs = _permutations_with_sign(k)
    rows = np.arange(k)
    terms = np.prod(A[:, rows[None, :], perms], axis=-1)  # (B, k!)
    return terms @ signs


def _minors(V: np.ndarray) -> np.ndarray:
    """All maximal minors of the k x m matrix V, columns chosen lexicographically."""
    k, m = V.shape
    cols = np.array(subsets(m, k), dtype=np.intp)  # (C(m,k), k)
    sub = np.transpose(V[:, cols], (1, 0, 2))      # (C(m,k), k, k)
    if k <= LEIBNIZ_MAX_GRADE:
        return _leibniz_det(sub)
    return batched_determinant(sub)


def wedge(vs) -> Blade:
    """Wedge product v_1 ^ ... ^ v_k of k vectors in C^m."""
    if len(vs) == 0:
        raise GradeError("wedge of zero vectors (grade 0) is not supported")
    V = as_vectors(vs)
    k, m = V.shape
    if k > m:
        raise GradeError(f"cannot wedge {k} vectors in dimension {m}")
    return Blade(m, k, _minors(V))


def blade_dot(x: Blade, y: Blade) -> complex:
    """Bilinear pairing of two blades of the same grade."""
    _check_same_space(x, y)
    return complex(np.sum(x.coeffs * y.coeffs))


def blade_herm_norm(x: Blade) -> float:
    return herm_norm(x.coeffs) if x.coeffs.size else 0.0


def gram_det(vs, ws, conjugate_second: bool = False) -> complex:
    """Determinant of the k x k matrix of pairings ``vs[i] . ws[j]``.

    With ``conjugate_second`` each ``ws[j]`` is conjugated first, which gives
    the Hermitian Gram determinant; for ``ws = vs`` that is
    ``blade_herm_norm(wedge(vs)) ** 2``.
    """
    V = as_vectors(vs)
    W = as_vectors(ws)
    if V.shape != W.shape:
        raise ContractError(f"families differ in shape: {V.shape} vs {W.shape}")
    if conjugate_second:
        W = np.conj(W)
    G = V @ W.T
    if G.shape[0] == 1:
        return complex(G[0, 0])
    return complex(batched_determinant(G))


class HadamardReport(NamedTuple):
    lhs: float
    rhs: float
    equality: bool


def hadamard_report(vs, tol: Tolerances = DEFAULT_TOL) -> HadamardReport:
    """Compare |v_1 ^ ... ^ v_k| with the product of the |v_i|.

    ``equality`` is the exact condition for equality: some vector is zero, or
    every Hermitian cross pairing v_i . conj(v_j), i != j, vanishes (up to
    ``tol.orth``).
    """
    V = as_vectors(vs)
    lhs = blade_herm_norm(wedge(V))
    norms = np.sqrt(np.sum(np.abs(V) ** 2, axis=1))
    rhs = float(np.prod(norms))
    if np.any(norms == 0.0):
        return HadamardReport(lhs, rhs, True)
    H = V @ np.conj(V).T
    off = np.abs(H[~np.eye(len(V), dtype=bool)])
    return HadamardReport(lhs, rhs, bool(np.all(off <= tol.orth)))
