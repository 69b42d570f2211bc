"""Points, hyperplanes and simplices in CP^n with the chordal Fubini-Study distance.

A simplex is given by n+1 unit vectors in C^{n+1}, read either as vertices
or as the coefficient vectors of its faces. In both readings the distance
from generator j to the opposite element is

    d_j = |D| / |u_0 ^ ... (omit u_j) ... ^ u_n|,   D = det(u_0, ..., u_n),

and the inequalities d_min^n <= |D| <= d_min hold.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, NamedTuple

import numpy as np

from .algebra import as_vector, as_vectors, determinant, herm_norm
from .config import DEFAULT_TOL, Tolerances
from .errors import ContractError, DegenerateInputError, NormalizationError, ParameterError
from .exterior import blade_herm_norm, wedge
from .hodge import L_map, box_det

Mode = Literal["vertices", "faces"]


def normalize(v) -> np.ndarray:
    """Scale ``v`` to unit Hermitian norm."""
    v = as_vector(v)
    r = herm_norm(v)
    if r == 0.0:
        raise NormalizationError("cannot normalize the zero vector")
    return v / r


def _unit(v, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    v = as_vector(v)
    r = herm_norm(v)
    if abs(r - 1.0) > tol.unit_norm:
        raise NormalizationError(f"expected a unit vector, got Hermitian norm {r!r}")
    return v


@dataclass(frozen=True)
class ProjPoint:
    """A point of CP^n by a unit representative."""

    rep: np.ndarray

    def __post_init__(self):
        r = _unit(self.rep).copy()
        r.flags.writeable = False
        object.__setattr__(self, "rep", r)


@dataclass(frozen=True)
class ProjHyperplane:
    """The hyperplane {x : rep . x = 0}, by a unit coefficient vector."""

    rep: np.ndarray

    def __post_init__(self):
        r = _unit(self.rep).copy()
        r.flags.writeable = False
        object.__setattr__(self, "rep", r)


def _rep(p) -> np.ndarray:
    if isinstance(p, (ProjPoint, ProjHyperplane)):
        return p.rep
    return _unit(p)


def fs_point_distance(p, q) -> float:
    """Chordal Fubini-Study distance |p ^ q| between two points."""
    a, b = _rep(p), _rep(q)
    if a.size != b.size:
        raise ContractError(f"dimension mismatch: {a.size} vs {b.size}")
    return blade_herm_norm(wedge([a, b]))


def fs_point_hyperplane_distance(u, v) -> float:
    """Distance from the point ``u`` to the hyperplane ``v``.

    This is min |u ^ x| over unit x with v . x = 0, which equals |u . v|.
    """
    a, b = _rep(u), _rep(v)
    if a.size != b.size:
        raise ContractError(f"dimension mismatch: {a.size} vs {b.size}")
    return abs(complex(np.sum(a * b)))


def vertex_opposite_distance(a, bs, tol: Tolerances = DEFAULT_TOL) -> float:
    """Distance from the point ``a`` to the hyperplane spanned by ``bs``."""
    a = _unit(a, tol)
    B = as_vectors(bs)
    for b in B:
        _unit(b, tol)
    w = blade_herm_norm(wedge(B))
    det = box_det(a, B)
    if w <= tol.indep or abs(det) <= tol.indep:
        raise DegenerateInputError("a, b_1..b_n are not in general position")
    return abs(det) / w


@dataclass(frozen=True)
class Simplex:
    """n+1 unit generators in C^{n+1} with their determinant and distances.

    ``dual_vertices`` is only set in face mode: row j is the unit vertex
    opposite face j, i.e. the common point of the other n hyperplanes.
    """

    n: int
    mode: Mode
    gens: np.ndarray
    D: complex
    dists: np.ndarray
    d_min: float
    dual_vertices: np.ndarray | None = field(default=None, compare=False)

    @property
    def abs_det(self) -> float:
        return abs(self.D)


def _build_simplex(us, mode: Mode, tol: Tolerances) -> Simplex:
    U = as_vectors(us)
    m = U.shape[1]
    if U.shape[0] != m:
        raise ContractError(f"need {m} generators in dimension {m}, got {U.shape[0]}")
    norms = np.sqrt(np.sum(np.abs(U) ** 2, axis=1))
    bad = np.flatnonzero(np.abs(norms - 1.0) > tol.unit_norm)
    if bad.size:
        raise NormalizationError(
            f"generator {bad[0]} has Hermitian norm {norms[bad[0]]!r}; use normalize() first"
        )
    D = determinant(U)
    if abs(D) <= tol.indep:
        raise DegenerateInputError(f"generators are not in general position (|D| = {abs(D):.3g})")
    # Omitting row j: |wedge| of the others; d_j = |D| / that.
    crosses = [L_map(wedge(np.delete(U, j, axis=0))) for j in range(m)]
    wnorms = np.array([herm_norm(c) for c in crosses])
    dists = abs(D) / wnorms
    dual = None
    if mode == "faces":
        dual = np.stack([c / r for c, r in zip(crosses, wnorms)])
        dual.flags.writeable = False
    U = U.copy()
    U.flags.writeable = False
    dists.flags.writeable = False
    return Simplex(m - 1, mode, U, D, dists, float(dists.min()), dual)


def simplex_from_vertices(us, tol: Tolerances = DEFAULT_TOL) -> Simplex:
    return _build_simplex(us, "vertices", tol)


def simplex_from_faces(us, tol: Tolerances = DEFAULT_TOL) -> Simplex:
    """Simplex whose faces are the hyperplanes with coefficient vectors ``us``.

    d_j is the distance from hyperplane j to the opposite vertex; the formula
    is the same as in vertex mode.
    """
    return _build_simplex(us, "faces", tol)


@dataclass(frozen=True)
class IsoscelesParams:
    s: float

    def __post_init__(self):
        if not (isinstance(self.s, (int, float)) and 0.0 < self.s <= 1.0):
            raise ParameterError(f"s must lie in (0, 1], got {self.s!r}")


@dataclass(frozen=True)
class RegularParams:
    n: int
    c: float

    def __post_init__(self):
        if not (isinstance(self.n, int) and self.n >= 1):
            raise ParameterError(f"n must be a positive integer, got {self.n!r}")
        if not (isinstance(self.c, (int, float)) and 0.0 <= self.c < 1.0):
            raise ParameterError(f"c must lie in [0, 1), got {self.c!r}")


def isosceles_vectors(s: float) -> np.ndarray:
    t = math.sqrt((1.0 - s * s) / 2.0)
    return np.array([[t, t, s], [1, 0, 0], [0, 1, 0]], dtype=np.complex128)


def make_isosceles(p: IsoscelesParams | float) -> Simplex:
    """Triangle in CP^2 with vertex a = [t, t, s], t = sqrt((1-s^2)/2), and b_1 = e_0, b_2 = e_1.

    Here |D| = d_min = s and the side lengths are 1, sqrt((1+s^2)/2) twice.
    """
    if not isinstance(p, IsoscelesParams):
        p = IsoscelesParams(p)
    return simplex_from_vertices(isosceles_vectors(p.s))


def regular_vectors(n: int, c: float) -> np.ndarray:
    """Rows of the symmetric square root of (1-c) I + c J."""
    m = n + 1
    lo = math.sqrt(1.0 - c)
    hi = math.sqrt(1.0 - c + m * c)
    R = lo * np.eye(m) + (hi - lo) / m * np.ones((m, m))
    return R.astype(np.complex128)


def make_regular(p: RegularParams) -> Simplex:
    """n+1 unit vectors whose pairwise Hermitian pairings all equal c."""
    return simplex_from_vertices(regular_vectors(p.n, p.c))


def regular_abs_det(n: int, c: float) -> float:
    return math.sqrt((1.0 - c) ** n * (1.0 + n * c))


def regular_d_min(n: int, c: float) -> float:
    return math.sqrt((1.0 - c) * (1.0 + n * c) / (1.0 + (n - 1) * c))


class InequalityCheck(NamedTuple):
    lower_margin: float
    upper_margin: float
    near_equality_count: int


def check_inequalities(sx: Simplex, tol: Tolerances = DEFAULT_TOL) -> InequalityCheck:
    """Margins in d_min^n <= |D| <= d_min and the number of d_j tied with d_min."""
    ad = sx.abs_det
    lower = ad - sx.d_min**sx.n
    upper = sx.d_min - ad
    ties = int(np.count_nonzero(sx.dists <= sx.d_min + tol.near_equality))
    return InequalityCheck(lower, upper, ties)


def sandwich_holds(sx: Simplex, tol: Tolerances = DEFAULT_TOL) -> bool:
    ad = sx.abs_det
    slack = 1.0 + tol.ineq_slack
    return sx.d_min**sx.n <= ad * slack and ad <= sx.d_min * slack
