import math
from math import comb

import numpy as np
import pytest

from projsimplex.algebra import basis_vector, determinant
from projsimplex.errors import ContractError, GradeError
from projsimplex.exterior import (
    Blade,
    blade_dot,
    blade_herm_norm,
    gram_det,
    hadamard_report,
    rank_subset,
    subsets,
    unrank_subset,
    wedge,
)

from conftest import cgauss, rel

R2 = 1 / math.sqrt(2)
e = lambda i, m=3: basis_vector(m, i)  # noqa: E731


@pytest.mark.parametrize("m", range(1, 8))
def test_subset_ranking_roundtrip(m):
    for k in range(m + 1):
        S = subsets(m, k)
        assert len(S) == comb(m, k)
        assert list(S) == sorted(S)
        for r, s in enumerate(S):
            assert rank_subset(s, m) == r
            assert unrank_subset(r, m, k) == s


def test_wedge_basis_blade():
    b = wedge([e(0), e(1)])
    assert b.coeff((0, 1)) == 1
    assert b.coeff((0, 2)) == 0 and b.coeff((1, 2)) == 0


def test_wedge_repeated_vector_is_zero(rng):
    v = cgauss(rng, 4)
    assert np.max(np.abs(wedge([v, v]).coeffs)) <= 1e-14 * np.sum(np.abs(v)) ** 2


def test_wedge_hand_minors():
    b = wedge([[1, 0, 0], [R2, R2, 0]])
    np.testing.assert_allclose(b.coeffs, [R2, 0, 0], atol=1e-15)
    assert blade_herm_norm(b) == pytest.approx(R2, rel=1e-15)


def test_wedge_coefficients_are_minors(rng):
    # coefficient on S is det of the columns S
    for k, m in [(2, 4), (3, 5), (5, 6), (6, 6)]:
        V = cgauss(rng, k, m)
        b = wedge(V)
        for S in subsets(m, k):
            ref = determinant(V[:, list(S)])
            assert abs(b.coeff(S) - ref) <= 1e-12 * (1 + abs(ref))


def test_wedge_grade_errors(rng):
    with pytest.raises(GradeError):
        wedge([])
    with pytest.raises(GradeError):
        wedge(cgauss(rng, 3, 2))
    with pytest.raises(ContractError):
        wedge([[1, 0], [1, 0, 0]])


def test_blade_type_invariants():
    with pytest.raises(ContractError):
        Blade(3, 2, [1, 2])
    with pytest.raises(GradeError):
        Blade(3, 4, [])
    b = Blade.basis(4, (1, 3))
    with pytest.raises(ValueError):
        b.coeffs[0] = 5


def test_blade_dot_basis():
    a = Blade.basis(4, (0, 2))
    assert blade_dot(a, a) == 1
    assert blade_dot(a, Blade.basis(4, (1, 2))) == 0
    with pytest.raises(ContractError):
        blade_dot(a, Blade.basis(4, (1,)))


def test_blade_dot_is_gramian_2x2(rng):
    v1, v2, w1, w2 = cgauss(rng, 4, 3)
    lhs = blade_dot(wedge([v1, v2]), wedge([w1, w2]))
    rhs = (v1 @ w1) * (v2 @ w2) - (v1 @ w2) * (v2 @ w1)
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


def test_gram_det_examples():
    u = np.array([0.6, 0.8j, 0])
    assert gram_det([u], [u], True) == pytest.approx(1, rel=1e-15)
    assert gram_det([e(0), e(1)], [e(0), e(1)], False) == 1
    vs = [[1, 0, 0], [R2, R2, 0]]
    assert gram_det(vs, vs, True) == pytest.approx(0.5, rel=1e-15)


def test_gram_det_shape_mismatch(rng):
    with pytest.raises(ContractError):
        gram_det(cgauss(rng, 2, 3), cgauss(rng, 3, 3))


@pytest.mark.parametrize("m", range(1, 7))
def test_gramian_identity(rng, m):
    for k in range(1, m + 1):
        vs, ws = cgauss(rng, k, m), cgauss(rng, k, m)
        assert rel(blade_dot(wedge(vs), wedge(ws)), gram_det(vs, ws)) <= 1e-10
        h = gram_det(vs, vs, True)
        assert abs(h.imag) <= 1e-10 * abs(h.real)
        assert rel(blade_herm_norm(wedge(vs)) ** 2, h.real) <= 1e-10


def test_wedge_antisymmetric(rng):
    V = cgauss(rng, 4, 6)
    W = V[[2, 1, 0, 3]]
    a, b = wedge(V).coeffs, wedge(W).coeffs
    nz = np.abs(a) > 0
    assert np.all(np.sign(b[nz].real) == -np.sign(a[nz].real))
    assert rel(b, -a) <= 1e-12


def test_hadamard_examples():
    assert hadamard_report([e(0, 4), e(2, 4)]) == (1.0, 1.0, True)
    v = np.array([0.6, 0, 0.8j])
    lhs, rhs, eq = hadamard_report([v, v])
    assert lhs == 0 and rhs == pytest.approx(1) and not eq
    lhs, rhs, eq = hadamard_report([[1, 0, 0], [R2, R2, 0]])
    assert lhs == pytest.approx(R2) and rhs == pytest.approx(1) and not eq


def test_hadamard_zero_vector_is_equality():
    assert hadamard_report([[0, 0, 0], [1, 2, 3]]).equality


def test_hadamard_scaling(rng):
    for _ in range(50):
        k, m = sorted(rng.integers(1, 7, 2))
        V = cgauss(rng, k, m)
        lhs, rhs, _ = hadamard_report(V)
        assert lhs <= rhs * (1 + 1e-12)
        alpha = complex(*rng.standard_normal(2))
        W = V.copy()
        W[0] *= alpha
        l2, r2, _ = hadamard_report(W)
        assert l2 == pytest.approx(abs(alpha) * lhs, rel=1e-12)
        assert r2 == pytest.approx(abs(alpha) * rhs, rel=1e-12)


def test_hadamard_equality_for_hermitian_orthogonal(rng):
    # columns of a unitary, rescaled: Hermitian-orthogonal but not bilinear-orthogonal
    Q, _ = np.linalg.qr(cgauss(rng, 5, 5))
    V = Q.T[:3] * np.array([[2.0], [0.5], [3.0]])
    lhs, rhs, eq = hadamard_report(V)
    assert eq
    assert lhs == pytest.approx(rhs, rel=1e-12)
