import numpy as np
import pytest

from projsimplex.algebra import basis_vector, determinant, herm_norm
from projsimplex.errors import ContractError, DegenerateInputError
from projsimplex.exterior import Blade, blade_herm_norm, wedge
from projsimplex.hodge import (
    L_map,
    box_det,
    generalized_cross,
    lagrange_direct,
    lagrange_vector,
    multicross,
)

from conftest import cgauss, rel, unit_rows


@pytest.mark.parametrize("n", range(1, 6))
def test_L_on_basis_blades(n):
    m = n + 1
    np.testing.assert_array_equal(L_map(Blade.basis(m, range(1, m))), basis_vector(m, 0))
    np.testing.assert_array_equal(L_map(Blade.basis(m, range(n))), (-1) ** n * basis_vector(m, n))
    for j in range(m):
        omit = [i for i in range(m) if i != j]
        np.testing.assert_array_equal(L_map(Blade.basis(m, omit)), (-1) ** j * basis_vector(m, j))


def test_L_rejects_wrong_grade():
    with pytest.raises(ContractError):
        L_map(Blade.basis(4, (0, 1)))


def test_L_is_classical_cross_product_in_C3(rng):
    for _ in range(20):
        a, b = cgauss(rng, 2, 3)
        assert rel(L_map(wedge([a, b])), np.cross(a, b)) <= 1e-14


@pytest.mark.parametrize("n", range(1, 6))
def test_L_isometry(rng, n):
    for _ in range(20):
        x = Blade(n + 1, n, cgauss(rng, n + 1))
        assert herm_norm(L_map(x)) == pytest.approx(blade_herm_norm(x), rel=1e-12)


def test_generalized_cross_examples(rng):
    e = lambda i: basis_vector(3, i)  # noqa: E731
    np.testing.assert_array_equal(generalized_cross([e(1), e(2)]), e(0))
    v = cgauss(rng, 4)
    dep = [v, 2 * v, cgauss(rng, 4)]
    assert np.max(np.abs(generalized_cross(dep))) <= 1e-13 * np.sum(np.abs(v)) ** 3


def test_generalized_cross_orthogonal(rng):
    bs = cgauss(rng, 3, 4)
    c = generalized_cross(bs)
    for b in bs:
        assert abs(np.sum(c * b)) <= 1e-10


def test_generalized_cross_count_checked(rng):
    with pytest.raises(ContractError):
        generalized_cross(cgauss(rng, 2, 4))


def test_box_det_examples(rng):
    for n in range(1, 6):
        m = n + 1
        bs = np.eye(m)[1:]
        assert box_det(basis_vector(m, 0), bs) == pytest.approx(1)
        B = cgauss(rng, n, m)
        assert abs(box_det(B[0], B)) <= 1e-10


@pytest.mark.parametrize("n", range(1, 6))
def test_box_det_is_determinant(rng, n):
    for _ in range(30):
        A = cgauss(rng, n + 1, n + 1)
        assert rel(box_det(A[0], A[1:]), determinant(A)) <= 1e-10


def test_lagrange_triple_product(rng):
    # n = 2: L(v ^ L(w1 ^ w2)) = v x (w1 x w2)
    for _ in range(20):
        v, w1, w2 = cgauss(rng, 3, 3)
        ref = np.cross(v, np.cross(w1, w2))
        assert rel(lagrange_vector([v], [w1, w2]), ref) <= 1e-12
        assert rel(lagrange_direct([v], [w1, w2]), ref) <= 1e-12


@pytest.mark.parametrize("n", range(2, 6))
def test_lagrange_standard_basis_ws(rng, n):
    m = n + 1
    ws = np.eye(m)[1:]
    vs = np.hstack([np.zeros((n - 1, 1)), cgauss(rng, n - 1, n)])
    assert rel(lagrange_vector(vs, ws), lagrange_direct(vs, ws)) <= 1e-12


@pytest.mark.parametrize("n", range(1, 6))
def test_lagrange_two_paths_and_projection(rng, n):
    m = n + 1
    for _ in range(20):
        vs, ws = cgauss(rng, n - 1, m), cgauss(rng, n, m)
        lv = lagrange_vector(vs, ws)
        assert rel(lv, lagrange_direct(vs, ws)) <= 1e-10
        z = cgauss(rng, m)
        M = np.vstack([z @ ws.T, vs @ ws.T])
        assert rel(np.sum(z * lv), (-1) ** n * determinant(M)) <= 1e-10


def test_lagrange_rejects_dependent(rng):
    ws = cgauss(rng, 3, 4)
    ws[2] = ws[0] + ws[1]
    with pytest.raises(DegenerateInputError):
        lagrange_vector(cgauss(rng, 2, 4), ws)
    vs = cgauss(rng, 2, 4)
    vs[1] = 3j * vs[0]
    with pytest.raises(DegenerateInputError):
        lagrange_vector(vs, cgauss(rng, 3, 4))


def test_multicross_standard_basis():
    for n in range(1, 5):
        I = np.eye(n + 1)
        res, D = multicross(I[0], I[1:])
        assert abs(D) == 1
        assert np.allclose(np.abs(res), np.abs(I[0]))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_multicross_norm_and_collinearity(rng, n):
    for _ in range(30):
        U = unit_rows(rng, n + 1, n + 1)
        res, D = multicross(U[0], U[1:])
        assert herm_norm(res) / herm_norm(U[0]) == pytest.approx(abs(D) ** (n - 1), rel=1e-8)
        pair = abs(np.sum(res * np.conj(U[0])))
        assert pair == pytest.approx(herm_norm(res) * herm_norm(U[0]), rel=1e-8)


def test_multicross_sign_depends_only_on_n(rng):
    # result / (D^(n-1) a) is the same sign for every configuration at fixed n
    for n in range(1, 5):
        signs = set()
        for _ in range(10):
            U = cgauss(rng, n + 1, n + 1)
            res, D = multicross(U[0], U[1:])
            ratio = res / (D ** (n - 1) * U[0])
            assert np.allclose(ratio, ratio[0], rtol=1e-9)
            signs.add(int(round(ratio[0].real)))
        assert len(signs) == 1


def test_multicross_degenerate(rng):
    U = cgauss(rng, 3, 3)
    U[2] = U[0]
    with pytest.raises(DegenerateInputError):
        multicross(U[0], U[1:])
