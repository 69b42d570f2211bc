"""Numerical tolerances shared across the package."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    """Every threshold the library compares against, in one place.

    The defaults are the values the test-suite is calibrated for. Pass a
    modified copy (``dataclasses.replace``) to the functions that accept a
    ``tol`` argument to tighten or loosen individual checks.
    """

    unit_norm: float = 1e-12          # |herm_norm(u) - 1| allowed for unit inputs
    indep: float = 1e-10              # |det| or |wedge| below this is degenerate
    orth: float = 1e-10               # |v_i . conj(v_j)| counted as zero
    ineq_slack: float = 1e-9          # relative slack on the sandwich inequality
    near_equality: float = 1e-9       # d_j within this of d_min counts as a tie
    census_margin: float = 1e-6       # lower margin counted as "near equality"
    det_feasibility: float = 1e-6     # | |D| - target | for conjecture search
    sample_reject: float = 1e-6       # random simplices with |D| below are redrawn

    # residual bounds used by the verification suites
    identity_rel: float = 1e-10
    isometry_rel: float = 1e-12
    multicross_rel: float = 1e-8
    invariance_rel: float = 1e-10


DEFAULT_TOL = Tolerances()
