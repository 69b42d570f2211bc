"""Randomized identity suites behind the ``verify`` command.

Each suite maps one random case to a nonnegative residual and compares it
with a limit taken from :class:`Tolerances`. Case ``i`` of suite ``s`` at
dimension ``n`` is seeded from ``(seed, n, s, i)`` so a failure can be
replayed from the printed seed alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebra import determinant, determinant_cofactor, herm_norm, rel_err
from .config import DEFAULT_TOL, Tolerances
from .exterior import Blade, blade_dot, blade_herm_norm, gram_det, wedge
from .hodge import L_map, box_det, lagrange_direct, lagrange_vector, multicross
from .experiments import derive_seed, random_unit_vectors, sample_random_simplex
from .projective import fs_point_hyperplane_distance, simplex_from_faces, simplex_from_vertices


def random_complex(rng: np.random.Generator, *shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def random_unitary(rng: np.random.Generator, m: int) -> np.ndarray:
    """Haar-distributed unitary matrix (QR of a complex Ginibre matrix)."""
    Q, R = np.linalg.qr(random_complex(rng, m, m))
    d = np.diag(R)
    return Q * (d / np.abs(d))


def _gramian(n, rng, tol):
    m = n + 1
    k = int(rng.integers(1, m + 1))
    vs, ws = random_complex(rng, k, m), random_complex(rng, k, m)
    r1 = rel_err(blade_dot(wedge(vs), wedge(ws)), gram_det(vs, ws, False))
    h = gram_det(vs, vs, True)
    r2 = rel_err(blade_herm_norm(wedge(vs)) ** 2, h.real)
    return max(r1, r2, abs(h.imag) / abs(h.real)), tol.identity_rel


def _isometry(n, rng, tol):
    m = n + 1
    x = Blade(m, n, random_complex(rng, m))
    y = wedge(random_complex(rng, n, m))
    r = max(rel_err(herm_norm(L_map(b)), blade_herm_norm(b)) for b in (x, y))
    return r, tol.isometry_rel


def _box(n, rng, tol):
    m = n + 1
    A = random_complex(rng, m, m)
    det = determinant(A)
    r = rel_err(box_det(A[0], A[1:]), det)
    if m <= 6:
        cof = determinant_cofactor(A)
        r = max(r, abs(det - cof) / (1.0 + abs(cof)))
    return r, tol.identity_rel


def _lagrange(n, rng, tol):
    m = n + 1
    vs, ws = random_complex(rng, n - 1, m), random_complex(rng, n, m)
    lv = lagrange_vector(vs, ws, tol)
    r1 = rel_err(lv, lagrange_direct(vs, ws))
    z = random_complex(rng, m)
    M = np.vstack([z @ ws.T, vs @ ws.T])
    r2 = rel_err(np.sum(z * lv), (-1) ** n * determinant(M))
    return max(r1, r2), tol.identity_rel


def _multicross(n, rng, tol):
    m = n + 1
    U = random_unit_vectors(rng, m, m)
    a, us = U[0], U[1:]
    res, D = multicross(a, us, tol)
    r1 = rel_err(herm_norm(res), abs(D) ** (n - 1) * herm_norm(a))
    r2 = 1.0 - abs(np.sum(res * np.conj(a))) / (herm_norm(res) * herm_norm(a))
    return max(r1, abs(r2)), tol.multicross_rel


def _sandwich(n, rng, tol):
    sx = sample_random_simplex(n, rng, tol)
    r = max(0.0, sx.d_min**n / sx.abs_det - 1.0, sx.abs_det / sx.d_min - 1.0)
    return r, tol.ineq_slack


def _duality(n, rng, tol):
    m = n + 1
    sx = simplex_from_faces(random_unit_vectors(rng, m, m), tol)
    vx = simplex_from_vertices(sx.gens, tol)
    r = rel_err(sx.dists, vx.dists)
    for j in range(m):
        r = max(r, rel_err(fs_point_hyperplane_distance(sx.dual_vertices[j], sx.gens[j]), sx.dists[j]))
    return r, tol.identity_rel


def _gauge(n, rng, tol):
    m = n + 1
    U = random_unit_vectors(rng, m, m)
    base = simplex_from_vertices(U, tol)
    phases = np.exp(1j * rng.uniform(0, 2 * np.pi, m))
    W = random_unitary(rng, m)
    r = 0.0
    for V in (U * phases[:, None], U @ W.T):
        sx = simplex_from_vertices(V, tol)
        r = max(r, rel_err(sx.dists, base.dists), rel_err(sx.abs_det, base.abs_det))
    return r, tol.invariance_rel


SUITES: dict[str, Callable] = {
    "gramian": _gramian,
    "isometry": _isometry,
    "box-product": _box,
    "lagrange": _lagrange,
    "multicross": _multicross,
    "sandwich": _sandwich,
    "duality": _duality,
    "gauge": _gauge,
}


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    worst: float = 0.0
    worst_n: int = 0
    worst_seed: int = 0
    limit: float = 0.0
    failed: int = 0
    first_failure: tuple[int, int, float] | None = None  # (n, seed, residual)

    @property
    def passed(self) -> bool:
        return self.failed == 0


def run_suite(name: str, max_n: int, samples: int, seed: int = 0, tol: Tolerances = DEFAULT_TOL) -> SuiteResult:
    fn = SUITES[name]
    sid = list(SUITES).index(name)
    out = SuiteResult(name)
    for n in range(1, max_n + 1):
        for i in range(samples):
            case_seed = derive_seed(seed, (n * 64 + sid) * 1_000_003 + i)
            resid, limit = fn(n, np.random.default_rng(case_seed), tol)
            out.cases += 1
            out.limit = limit
            if resid >= out.worst:
                out.worst, out.worst_n, out.worst_seed = resid, n, case_seed
            if not resid <= limit:
                out.failed += 1
                if out.first_failure is None:
                    out.first_failure = (n, case_seed, resid)
    return out


def run_all(max_n: int, samples: int, seed: int = 0, tol: Tolerances = DEFAULT_TOL, suites=None):
    return [run_suite(name, max_n, samples, seed, tol) for name in (suites or SUITES)]


def replay(name: str, n: int, case_seed: int, tol: Tolerances = DEFAULT_TOL) -> float:
    """Residual of a single case, from the seed printed on failure."""
    return SUITES[name](n, np.random.default_rng(case_seed), tol)[0]
