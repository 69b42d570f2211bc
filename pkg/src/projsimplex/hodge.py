"""The isometry L from grade-(m-1) blades to vectors and what it buys.

L sends the coordinate blade that omits index j to (-1)^j e_j. Composed with
the wedge product it is a cross product in any dimension: the image of
b_1 ^ ... ^ b_n is orthogonal (bilinearly) to every b_j, and pairing it
with a vector a expands det(a, b_1, ..., b_n) along its first row.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .algebra import as_vector, as_vectors, batched_determinant, determinant
from .config import DEFAULT_TOL, Tolerances
from .errors import ContractError, DegenerateInputError
from .exterior import Blade, blade_herm_norm, wedge


def L_map(x: Blade) -> np.ndarray:
    """Image of a grade-(m-1) blade under L."""
    m = x.ambient_dim
    if x.grade != m - 1:
        raise ContractError(f"L is defined on grade {m - 1} in dimension {m}, got grade {x.grade}")
    # lexicographic (m-1)-subsets omit m-1, m-2, ..., 0 in that order
    omitted_first = x.coeffs[::-1]
    signs = np.where(np.arange(m) % 2 == 0, 1.0, -1.0)
    return signs * omitted_first


def generalized_cross(bs) -> np.ndarray:
    """L(b_1 ^ ... ^ b_n) for n vectors in C^{n+1}."""
    B = as_vectors(bs)
    if B.shape[0] != B.shape[1] - 1:
        raise ContractError(f"need {B.shape[1] - 1} vectors in dimension {B.shape[1]}, got {B.shape[0]}")
    return L_map(wedge(B))


def box_det(a, bs) -> complex:
    """det(a, b_1, ..., b_n) computed as a . L(b_1 ^ ... ^ b_n)."""
    a = as_vector(a)
    c = generalized_cross(bs)
    if a.size != c.size:
        raise ContractError(f"dimension mismatch: {a.size} vs {c.size}")
    return complex(np.sum(a * c))


def _require_independent(V: np.ndarray, tol: Tolerances, what: str) -> None:
    if V.shape[0] and blade_herm_norm(wedge(V)) <= tol.indep:
        raise DegenerateInputError(f"{what} is linearly dependent (|wedge| <= {tol.indep:g})")


def lagrange_vector(vs, ws, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """L(v_1 ^ ... ^ v_{n-1} ^ L(w_1 ^ ... ^ w_n)) by the expansion formula.

    The result is (-1)^n times the formal determinant whose first row holds
    the vectors w_1..w_n and whose remaining rows hold the scalars v_i . w_j,
    expanded along the vector row.
    """
    W = as_vectors(ws)
    n = W.shape[0]
    m = W.shape[1]
    if m != n + 1:
        raise ContractError(f"need {m - 1} vectors w in dimension {m}, got {n}")
    V = as_vectors(vs) if len(vs) else np.zeros((0, m), dtype=np.complex128)
    if V.shape != (n - 1, m):
        raise ContractError(f"need {n - 1} vectors v of dimension {m}, got shape {V.shape}")
    _require_independent(V, tol, "v family")
    _require_independent(W, tol, "w family")

    P = V @ W.T  # (n-1, n) scalar rows
    if n == 1:
        cof = np.ones(1, dtype=np.complex128)
    else:
        minors = np.stack([np.delete(P, j, axis=1) for j in range(n)])
        cof = batched_determinant(minors) if n > 2 else minors[:, 0, 0]
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    return (-1) ** n * ((signs * cof) @ W)


def lagrange_direct(vs, ws) -> np.ndarray:
    """The same vector by literal composition of wedges and L."""
    W = as_vectors(ws)
    a = generalized_cross(W)
    family = list(as_vectors(vs)) if len(vs) else []
    return L_map(wedge(family + [a]))


class MulticrossResult(NamedTuple):
    result: np.ndarray
    D: complex


def multicross(a, us, tol: Tolerances = DEFAULT_TOL) -> MulticrossResult:
    """Cross of the cross products v_j = L(a ^ us without u_j).

    The result equals D^{n-1} a up to a sign that depends only on n, where
    D = det(a, u_1, ..., u_n). The sign is not reported.
    """
    a = as_vector(a)
    U = as_vectors(us)
    n, m = U.shape
    if m != n + 1 or a.size != m:
        raise ContractError(f"need {m - 1} vectors u and a vector a, all in dimension {m}")
    D = determinant(np.vstack([a, U]))
    if abs(D) <= tol.indep:
        raise DegenerateInputError(f"a, u_1..u_n are dependent (|det| = {abs(D):.3g})")
    vs = [
        L_map(wedge(np.vstack([a, np.delete(U, j, axis=0)])))
        for j in range(n)
    ]
    return MulticrossResult(L_map(wedge(vs)), D)
