"""Exact integer/rational linear algebra.

Determinants use fraction-free (Bareiss) elimination so every
intermediate entry stays an integer (each is a minor of the original
matrix, which bounds growth).  Linear systems are solved by the same
elimination on the augmented matrix followed by rational
back-substitution, with an exact residual check.
"""

from fractions import Fraction
from math import lcm


def _check_square(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    return n


def det_int(m):
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve_exact(m, b):
    """Solve M x = b exactly over the rationals.

    Returns a list of reduced Fractions.  Raises ValueError if M is
    singular.  The solution is verified by exact substitution.
    """
    n = _check_square(m)
    if len(b) != n:
        raise ValueError("dimension mismatch")
    a = [[int(x) for x in row] + [int(bv)] for row, bv in zip(m, b)]
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise ValueError("singular matrix")
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    if n and a[n - 1][n - 1] == 0:
        raise ValueError("singular matrix")

    x = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(a[i][n])
        for j in range(i + 1, n):
            acc -= a[i][j] * x[j]
        x[i] = acc / a[i][i]

    for row, bv in zip(m, b):
        if sum(Fraction(c) * xv for c, xv in zip(row, x)) != bv:
            raise ArithmeticError("nonzero residual in exact solve")
    return x


def denominator_lcm(v):
    """Least k >= 1 such that k*v is an integer vector."""
    return lcm(*(Fraction(x).denominator for x in v)) if len(v) else 1


# --- small dense matrix helpers used by the block/Chebyshev machinery ---


def mat_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_zero(n):
    return [[0] * n for _ in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(k, a):
    return [[k * x for x in row] for row in a]


def mat_mul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_transpose(a):
    return [list(row) for row in zip(*a)]
