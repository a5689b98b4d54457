from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sandpiles.linalg import (
    denominator_lcm,
    det_int,
    mat_identity,
    mat_mul,
    mat_transpose,
    solve_exact,
)


def fraction_det(mat):
    """Plain Gaussian elimination over Fraction, as the oracle."""
    n = len(mat)
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    assert det.denominator == 1
    return int(det)


square_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(-9, 9), min_size=n, max_size=n),
        min_size=n, max_size=n,
    )
)


@given(square_matrices)
@settings(max_examples=200)
def test_det_matches_fraction_elimination(mat):
    assert det_int(mat) == fraction_det(mat)


def test_det_known_values():
    assert det_int([[5]]) == 5
    assert det_int([[1, 2], [3, 4]]) == -2
    assert det_int([[3, -1, -1], [-1, 3, -1], [-1, -1, 2]]) == 8
    assert det_int([[2, -1], [-2, 2]]) == 2


def test_det_singular():
    assert det_int([[1, 2], [2, 4]]) == 0


def test_det_transpose_invariant():
    m = [[4, -1, 0], [-1, 3, -2], [0, -1, 2]]
    assert det_int(m) == det_int(mat_transpose(m))


@given(square_matrices, st.data())
@settings(max_examples=100)
def test_solve_exact_residual(mat, data):
    n = len(mat)
    rhs = data.draw(st.lists(st.integers(-9, 9), min_size=n, max_size=n))
    if det_int(mat) == 0:
        with pytest.raises(ValueError):
            solve_exact(mat, rhs)
        return
    x = solve_exact(mat, rhs)
    for i in range(n):
        assert sum(Fraction(mat[i][j]) * x[j] for j in range(n)) == rhs[i]


def test_solve_exact_rational_result():
    x = solve_exact([[2, 0], [0, 3]], [1, 1])
    assert x == [Fraction(1, 2), Fraction(1, 3)]
    assert denominator_lcm(x) == 6


def test_denominator_lcm_integers():
    assert denominator_lcm([Fraction(3), Fraction(-2)]) == 1
    assert denominator_lcm([]) == 1
    assert denominator_lcm([Fraction(1, 4), Fraction(5, 6)]) == 12


def test_mat_mul_identity():
    m = [[1, 2], [3, 4]]
    assert mat_mul(m, mat_identity(2)) == m
    assert mat_mul(mat_identity(2), m) == m
