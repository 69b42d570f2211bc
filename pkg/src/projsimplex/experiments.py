"""Random simplices, Figure-style scatter data, census and the regular-simplex search.

Every random record ``i`` draws from its own generator seeded from
``(master_seed, i)``, so output is identical whatever the worker count.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Literal

import numpy as np
from scipy.optimize import brentq, minimize

from .config import DEFAULT_TOL, Tolerances
from .errors import ContractError, ParameterError, SamplingError, SearchFailure
from .projective import (
    IsoscelesParams,
    RegularParams,
    Simplex,
    check_inequalities,
    make_isosceles,
    make_regular,
    regular_abs_det,
    regular_d_min,
    simplex_from_vertices,
)

log = logging.getLogger(__name__)

Kind = Literal["random", "isosceles", "regular"]
KINDS = ("random", "isosceles", "regular")

MAX_REJECTIONS = 1000
PENALTY = 1e3

SWEEP_ISOSCELES = tuple(round(0.05 * k, 2) for k in range(1, 21))  # 0.05 .. 1.00
SWEEP_REGULAR = tuple(round(0.05 * k, 2) for k in range(1, 20))    # 0.05 .. 0.95


def derive_seed(master_seed: int, index: int) -> int:
    """64-bit seed of the stream used for item ``index`` of a run."""
    ss = np.random.SeedSequence([int(master_seed), int(index)])
    return int(ss.generate_state(1, dtype=np.uint64)[0])


def random_unit_vectors(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """Rows of i.i.d. standard complex Gaussians, Hermitian-normalized."""
    Z = (rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))) / math.sqrt(2)
    return Z / np.linalg.norm(Z, axis=1, keepdims=True)


def sample_random_simplex(n: int, rng, tol: Tolerances = DEFAULT_TOL) -> Simplex:
    """Simplex with n+1 Fubini-Study-uniform random vertices.

    Draws with |D| <= ``tol.sample_reject`` are rejected and redrawn.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not isinstance(rng, np.random.Generator):
        rng = np.random.default_rng(rng)
    for _ in range(MAX_REJECTIONS):
        U = random_unit_vectors(rng, n + 1, n + 1)
        if abs(np.linalg.det(U)) > tol.sample_reject:
            return simplex_from_vertices(U, tol)
    raise SamplingError(f"no simplex with |D| > {tol.sample_reject:g} after {MAX_REJECTIONS} draws")


@dataclass(frozen=True)
class ExperimentRecord:
    kind: Kind
    n: int
    seed: int
    d_min: float
    abs_det: float

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ContractError(f"unknown record kind {self.kind!r}")
        if not 0 <= self.seed < 2**64:
            raise ContractError("seed must be an unsigned 64-bit integer")
        s = 1.0 + DEFAULT_TOL.ineq_slack
        if not (self.d_min**self.n <= self.abs_det * s and self.abs_det <= self.d_min * s):
            raise ContractError(f"record violates d_min^n <= |D| <= d_min: {self}")
        if self.kind == "isosceles" and abs(self.abs_det - self.d_min) > DEFAULT_TOL.ineq_slack:
            raise ContractError(f"isosceles record off the line |D| = d_min: {self}")

    @classmethod
    def from_simplex(cls, kind: Kind, sx: Simplex, seed: int) -> "ExperimentRecord":
        return cls(kind, sx.n, seed, sx.d_min, sx.abs_det)


def _random_record(args) -> ExperimentRecord:
    n, seed = args
    return ExperimentRecord.from_simplex("random", sample_random_simplex(n, seed), seed)


def random_records(n: int, count: int, seed: int, workers: int = 1) -> list[ExperimentRecord]:
    jobs = [(n, derive_seed(seed, i)) for i in range(count)]
    if workers <= 1 or count < 2:
        return [_random_record(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_random_record, jobs, chunksize=max(1, count // (4 * workers))))


def run_figure(n: int, count: int, seed: int = 0, workers: int = 1) -> list[ExperimentRecord]:
    """Scatter data of (d_min, |D|): random simplices, then the named sweeps.

    The isosceles sweep (s = 0.05, ..., 1.00) exists only for n = 2; the
    regular sweep (c = 0.05, ..., 0.95) is emitted for every n.
    """
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    records = random_records(n, count, seed, workers)
    if n == 2:
        for s in SWEEP_ISOSCELES:
            records.append(ExperimentRecord.from_simplex("isosceles", make_isosceles(IsoscelesParams(s)), seed))
    for c in SWEEP_REGULAR:
        records.append(ExperimentRecord.from_simplex("regular", make_regular(RegularParams(n, c)), seed))
    return records


def regular_reference(n: int, target_det: float) -> tuple[float, float]:
    """(c, d_min) of the regular simplex in CP^n with |D| = target_det."""
    if not 0.0 < target_det <= 1.0:
        raise ParameterError(f"target_det must lie in (0, 1], got {target_det!r}")
    if target_det == 1.0:
        return 0.0, 1.0
    # |D|(c) decreases from 1 at c = 0 to 0 as c -> 1
    c = brentq(lambda c: regular_abs_det(n, c) - target_det, 0.0, 1.0 - 1e-15, xtol=1e-15, rtol=1e-15)
    return c, regular_d_min(n, c)


# --- conjecture search ---------------------------------------------------


@dataclass(frozen=True)
class OptResult:
    n: int
    target_det: float
    best_d_min: float
    achieved_det: float
    restarts: int
    evaluations: int
    best_generators: np.ndarray = field(compare=False)
    feasible: bool = True


def _unpack(x: np.ndarray, m: int) -> np.ndarray:
    Z = x[: m * m].reshape(m, m) + 1j * x[m * m:].reshape(m, m)
    return Z / np.linalg.norm(Z, axis=1, keepdims=True)


def _pack(U: np.ndarray) -> np.ndarray:
    return np.concatenate([U.real.ravel(), U.imag.ravel()])


def fast_dists(U: np.ndarray) -> tuple[float, np.ndarray]:
    """(|D|, d_j) for unit rows via d_j = 1 / |column j of U^{-1}|."""
    D = abs(np.linalg.det(U))
    inv = np.linalg.inv(U)
    return D, 1.0 / np.linalg.norm(inv, axis=0)


def _blend_to(U: np.ndarray, T: np.ndarray, t: float) -> np.ndarray:
    W = (1.0 - t) * U + t * T
    return W / np.linalg.norm(W, axis=1, keepdims=True)


def _restore(U: np.ndarray, target: float) -> np.ndarray | None:
    """Move U along a one-parameter path until |D| hits ``target`` exactly.

    Upward the path ends at the unitary polar factor (|D| = 1); downward it
    collapses every row onto row 0 (|D| = 0). Returns None if the path
    passes through a zero row.
    """
    D0 = abs(np.linalg.det(U))
    if D0 == target:
        return U
    if D0 < target:
        X, _, Yh = np.linalg.svd(U)
        T = X @ Yh
        if target >= 1.0:
            return T
    else:
        T = np.repeat(U[:1], len(U), axis=0)

    def f(t):
        W = (1.0 - t) * U + t * T
        if np.any(np.linalg.norm(W, axis=1) < 1e-12):
            raise FloatingPointError
        return abs(np.linalg.det(_blend_to(U, T, t))) - target

    try:
        t = brentq(f, 0.0, 1.0, xtol=1e-15, rtol=1e-15, maxiter=200)
    except (FloatingPointError, ValueError):
        return None
    return _blend_to(U, T, t)


def conjecture_search(
    n: int,
    target_det: float,
    restarts: int = 20,
    budget_per_restart: int = 4000,
    seed: int = 0,
    tol: Tolerances = DEFAULT_TOL,
) -> OptResult:
    """Search for n+1 unit vectors with |D| = target_det and d_min as large as possible.

    Each restart starts from a random configuration and runs Nelder-Mead on
    ``-d_min + 1e3 (|D| - target)^2`` over the real and imaginary parts of the
    generators (rows renormalized on every evaluation). The local optimum is
    then pushed onto |D| = target along a one-parameter path. Raises
    SearchFailure if no restart ends feasible.
    """
    if not 0.0 < target_det <= 1.0:
        raise ParameterError(f"target_det must lie in (0, 1], got {target_det!r}")
    if n < 1 or restarts < 1 or budget_per_restart < 1:
        raise ParameterError("n, restarts and budget_per_restart must be positive")
    m = n + 1
    evals = 0

    def objective(x):
        nonlocal evals
        evals += 1
        U = _unpack(x, m)
        try:
            D, d = fast_dists(U)
        except np.linalg.LinAlgError:
            return 1e6
        if not np.isfinite(D):
            return 1e6
        return -float(d.min()) + PENALTY * (D - target_det) ** 2

    best: OptResult | None = None
    fallback: OptResult | None = None
    for r in range(restarts):
        rng = np.random.default_rng(derive_seed(seed, r))
        x = _pack(random_unit_vectors(rng, m, m))
        start = evals
        fx = objective(x)
        # re-seed the simplex from the incumbent until the budget is spent
        while evals - start < budget_per_restart:
            res = minimize(
                objective,
                x,
                method="Nelder-Mead",
                options={
                    "maxfev": budget_per_restart - (evals - start),
                    "xatol": 1e-10,
                    "fatol": 1e-13,
                    "adaptive": True,
                },
            )
            improved = res.fun < fx - 1e-12
            if res.fun <= fx:
                x, fx = res.x, res.fun
            if not improved:
                break
        U = _unpack(x, m)
        raw_D, raw_d = fast_dists(U)
        V = _restore(U, target_det)
        if V is not None:
            sx = simplex_from_vertices(V, tol)
            cand = OptResult(n, target_det, sx.d_min, sx.abs_det, restarts, 0, sx.gens)
            if abs(cand.achieved_det - target_det) <= tol.det_feasibility and (
                best is None or cand.best_d_min > best.best_d_min
            ):
                best = cand
                continue
        if fallback is None or abs(raw_D - target_det) < abs(fallback.achieved_det - target_det):
            fallback = OptResult(n, target_det, float(raw_d.min()), float(raw_D), restarts, 0, U, False)
        log.debug("restart %d: no feasible restoration", r)

    if best is None:
        fb = fallback and OptResult(**{**fallback.__dict__, "evaluations": evals})
        raise SearchFailure(f"no configuration with |D| within {tol.det_feasibility:g} of {target_det}", fb)
    return OptResult(n, target_det, best.best_d_min, best.achieved_det, restarts, evals, best.best_generators)


# --- equality census -----------------------------------------------------


@dataclass(frozen=True)
class CensusReport:
    n: int
    samples: int
    near_equality: int      # simplices with lower margin <= census band
    with_n_ties: int        # ... of which at least n distances tie with d_min
    min_lower_margin: float

    @property
    def fraction(self) -> float | None:
        return self.with_n_ties / self.near_equality if self.near_equality else None


def equality_census(
    n: int,
    count: int,
    seed: int = 0,
    extra: list[Simplex] | tuple[Simplex, ...] = (),
    tol: Tolerances = DEFAULT_TOL,
) -> CensusReport:
    """Among simplices close to d_min^n = |D|, how many have n tied distances.

    ``extra`` simplices (e.g. hand-built equality cases) are tallied along
    with the ``count`` random ones.
    """
    if count < 1:
        raise ParameterError(f"count must be >= 1, got {count}")
    sims = [sample_random_simplex(n, derive_seed(seed, i), tol) for i in range(count)]
    sims.extend(extra)
    near = ties = 0
    lowest = math.inf
    for sx in sims:
        chk = check_inequalities(sx, tol)
        lowest = min(lowest, chk.lower_margin)
        if chk.lower_margin <= tol.census_margin:
            near += 1
            ties += chk.near_equality_count >= sx.n
    return CensusReport(n, len(sims), near, ties, lowest)
