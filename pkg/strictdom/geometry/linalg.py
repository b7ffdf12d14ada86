"""Exact Gaussian elimination."""
from fractions import Fraction

from strictdom.geometry.vectors import as_point, common_dimension


def rref(matrix):
    """Reduced row echelon form of a list of rows.

    Returns:
        (rows, pivots): the reduced rows and the pivot column of each nonzero row
    """
    rows = [list(r) for r in matrix]
    n_cols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        piv = rows[r][c]
        rows[r] = [v / piv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix):
    if not matrix:
        return 0
    return len(rref(matrix)[1])


def null_vector(matrix, n_cols):
    """A nonzero solution of matrix . mu = 0, or None when only mu = 0 solves it.

    The first free column is set to one and every other free column to
    zero, so the result is deterministic.
    """
    if not matrix:
        return tuple(Fraction(1) if j == 0 else Fraction(0) for j in range(n_cols))
    rows, pivots = rref(matrix)
    free = [j for j in range(n_cols) if j not in pivots]
    if not free:
        return None
    f = free[0]
    mu = [Fraction(0)] * n_cols
    mu[f] = Fraction(1)
    for row, p in zip(rows, pivots):
        mu[p] = -row[f]
    return tuple(mu)


def solve_square(matrix, rhs):
    """Unique solution of a square system, or None if the matrix is singular."""
    n = len(matrix)
    augmented = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(augmented)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        return None
    return tuple(row[n] for row in rows[:n])


def linear_dependence(points, affine=False):
    """Coefficients mu, not all zero, with sum_i mu_i x_i = 0.

    In affine mode sum_i mu_i = 0 holds as well. Dependence is guaranteed
    for at least d+2 points (affine) or d+1 points (linear) in R^d; below
    those counts the points may be independent, in which case None is
    returned.
    """
    points = [as_point(p) for p in points]
    dim = common_dimension(points)
    n = len(points)
    matrix = [[p[k] for p in points] for k in range(dim)]
    if affine:
        matrix.append([Fraction(1)] * n)
    return null_vector(matrix, n)
