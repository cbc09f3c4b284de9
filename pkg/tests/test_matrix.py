import json

import numpy as np
import pytest

from cfm.matrix import MatrixF, Tolerance, inner_product, leading_zero_count, rank
from cfm.scalar import COMPLEX, QUATERNION, REAL, Scalar, qmul

from helpers import FIELDS, complex_adjoint, oracle_rank, random_matrix


def vec(entries, field):
    return MatrixF.from_rows([entries], field)


def test_inner_product_examples():
    assert inner_product(vec([1, 0], REAL), vec([0, 1], REAL)).isclose(0)
    assert inner_product(vec([3, 4], REAL), vec([3, 4], REAL)).isclose(25)
    # <(i,0),(j,0)> = i conj(j) = -ij = -k
    i = Scalar(0, 1, 0, 0, QUATERNION)
    j = Scalar(0, 0, 1, 0, QUATERNION)
    assert inner_product(vec([i, 0], QUATERNION), vec([j, 0], QUATERNION)) == \
        Scalar(0, 0, 0, -1, QUATERNION)


def test_inner_product_length_mismatch():
    with pytest.raises(ValueError):
        inner_product(vec([1, 0], REAL), vec([1, 0, 0], REAL))


@pytest.mark.parametrize("field", FIELDS)
def test_inner_product_hermitian_and_left_linear(field):
    rng = np.random.default_rng(3)
    for _ in range(20):
        a, b = (random_matrix(rng, 1, 5, field) for _ in range(2))
        ab, ba = inner_product(a, b), inner_product(b, a)
        assert ab.isclose(ba.conj(), 1e-12)
        s = random_matrix(rng, 1, 1, field)[0, 0]
        assert inner_product(a.scale_left(s), b).isclose(s * ab, 1e-11)
        aa = inner_product(a, a)
        assert aa.a > 0 and np.allclose(aa.components[1:], 0, atol=1e-12)


@pytest.mark.parametrize("entries, expected", [
    ([0, 0, 5, 1], 2),
    ([1e-12, 1, 0], 1),
    ([0, 0, 0], 3),
])
def test_leading_zero_count(entries, expected):
    assert leading_zero_count(vec(entries, REAL), Tolerance(eps_zero=1e-9)) == expected


def test_leading_zero_count_snapping_is_monotone():
    rng = np.random.default_rng(0)
    tol = Tolerance()
    for _ in range(50):
        a = rng.standard_normal(6) * (rng.random(6) < 0.5) * 10.0 ** rng.integers(-12, 1, 6)
        snapped = np.where(np.abs(a) <= tol.eps_zero, 0.0, a)
        assert leading_zero_count(vec(snapped, REAL), tol) >= leading_zero_count(vec(a, REAL), tol)


def test_rank_examples():
    assert rank(MatrixF.identity(3)) == 3
    assert rank(MatrixF.from_rows([[1, 2], [2, 4]])) == 1
    # det = i*i - 1 = -2, so this matrix is invertible
    assert rank(MatrixF.from_rows([[1j, 1], [1, 1j]], COMPLEX)) == 2
    # here row 2 = -i * row 1
    assert rank(MatrixF.from_rows([[1j, 1], [1, -1j]], COMPLEX)) == 1


def test_quaternion_rank_depends_on_side():
    # rows (1, i) and (j, ji) = j*(1, i): left-dependent, rank 1
    i = np.array([0, 1, 0, 0.0])
    j = np.array([0, 0, 1, 0.0])
    one = np.array([1, 0, 0, 0.0])
    left = np.array([[one, i], [j, qmul(j, i)]])
    right = np.array([[one, i], [j, qmul(i, j)]])
    assert rank(MatrixF(left, QUATERNION)) == 1
    assert rank(MatrixF(right, QUATERNION)) == 2
    assert oracle_rank(MatrixF(left, QUATERNION)) == 1
    assert oracle_rank(MatrixF(right, QUATERNION)) == 2


@pytest.mark.parametrize("field", FIELDS)
def test_rank_matches_svd_oracle(field):
    rng = np.random.default_rng(11)
    for _ in range(30):
        r, n, m = rng.integers(1, 5), rng.integers(1, 6), rng.integers(1, 6)
        A = random_matrix(rng, n, r, field) @ random_matrix(rng, r, m, field)
        assert rank(A) == oracle_rank(A) == min(r, n, m)


@pytest.mark.parametrize("field", FIELDS)
def test_rank_invariant_under_row_operations(field):
    rng = np.random.default_rng(5)
    for _ in range(20):
        A = random_matrix(rng, 4, 2, field) @ random_matrix(rng, 2, 5, field)
        perm = rng.permutation(4)
        s = random_matrix(rng, 1, 1, field)[0, 0]
        data = A.data[perm].copy()
        data[0] = qmul(s.components, data[0])
        assert rank(MatrixF(data, field)) == rank(A) == 2


def test_complex_adjoint_is_multiplicative():
    rng = np.random.default_rng(2)
    A = random_matrix(rng, 2, 3, QUATERNION)
    B = random_matrix(rng, 3, 2, QUATERNION)
    assert np.allclose(complex_adjoint(A @ B), complex_adjoint(A) @ complex_adjoint(B))


@pytest.mark.parametrize("field", FIELDS)
def test_json_round_trip(field):
    rng = np.random.default_rng(9)
    M = random_matrix(rng, 2, 3, field)
    obj = json.loads(json.dumps(M.to_json()))
    assert obj["field"] == field.symbol
    assert all(len(v) == field.d for row in obj["rows"] for v in row)
    assert MatrixF.from_json(obj) == M


def test_bare_row_list_is_real():
    M = MatrixF.from_json([[0, -1, 0]])
    assert M.field is REAL and M.shape == (1, 3) and M[0, 1] == Scalar(-1.0)


def test_conjugate_transpose():
    M = MatrixF.from_rows([[1 + 2j, 3j]], COMPLEX)
    assert np.allclose(M.H.to_complex(), np.array([[1 - 2j], [-3j]]))
