"""Carathéodory support reduction, convex and conical-bounded.

Both loops follow the classical elimination: find a dependence mu among the
support, subtract alpha * mu with alpha = min { lambda_j / mu_j : mu_j > 0 },
drop the index attaining the minimum (the smallest one on ties) and repeat
until the support is small enough.
"""
from fractions import Fraction

from strictdom import error, logger
from strictdom.geometry.linalg import linear_dependence
from strictdom.geometry.vectors import as_point, common_dimension, convex_combination, is_zero


def _validate(x, points, weights):
    x = as_point(x)
    points = [as_point(p) for p in points]
    dim = common_dimension(points + [x])
    weights = [Fraction(w) for w in weights]
    if len(weights) != len(points):
        raise error.DimensionMismatch('{} weights for {} points'.format(len(weights), len(points)))
    if any(w < 0 for w in weights):
        raise error.DegenerateInput('Weights must be nonnegative')
    if convex_combination(weights, points) != x:
        raise error.DegenerateInput('Weights do not reconstruct {}'.format(x))
    return x, points, weights, dim


def _eliminate(points, weights, bound, affine):
    support = [i for i, w in enumerate(weights) if w > 0]
    lam = {i: weights[i] for i in support}
    while len(support) > bound:
        mu = linear_dependence([points[i] for i in support], affine=affine)
        if mu is None:
            raise error.InternalConsistencyError('No dependence among {} points'.format(len(support)))
        # Orient so that the weight sum never grows: sum(mu) >= 0, and some
        # mu_j > 0 must exist for alpha to be defined.
        if sum(mu) < 0 or (sum(mu) == 0 and not any(m > 0 for m in mu)):
            mu = tuple(-m for m in mu)
        alpha, drop = min((lam[i] / m, i) for i, m in zip(support, mu) if m > 0)
        for i, m in zip(support, mu):
            lam[i] -= alpha * m
        lam[drop] = Fraction(0)
        logger.debug('caratheodory: alpha=%s, dropping index %d', alpha, drop)
        support = [i for i in support if i != drop]
    indices = tuple(i for i in support if lam[i] > 0)
    return indices, tuple(lam[i] for i in indices)


def caratheodory_convex(x, points, weights):
    """Rewrite a convex combination with at most d+1 points.

    Args:
        x: the point, equal to sum weights[i] * points[i]
        points: the points of R^d
        weights: nonnegative, summing to one

    Returns:
        (indices, weights): a sub-support of size <= d+1 whose weights are
        nonnegative, sum to one and reconstruct x exactly
    """
    x, points, weights, dim = _validate(x, points, weights)
    if sum(weights) != 1:
        raise error.DegenerateInput('Convex weights must sum to 1, not {}'.format(sum(weights)))
    indices, reduced = _eliminate(points, weights, dim + 1, affine=True)
    if sum(reduced) != 1 or convex_combination(reduced, [points[i] for i in indices]) != x:
        raise error.InternalConsistencyError('Convex reduction lost the point {}'.format(x))
    return indices, reduced


def caratheodory_conical_bounded(x, vectors, weights):
    """Rewrite x = sum weights[i] * vectors[i] (weights >= 0, sum <= 1, x != 0)
    with at most d of the vectors, keeping the weight sum <= 1.

    This is the conical theorem with the origin as an extra free point: the
    elimination only uses dependences with sum(mu) >= 0, so each step can
    only lower the weight sum.
    """
    x, vectors, weights, dim = _validate(x, vectors, weights)
    if is_zero(x):
        raise error.DegenerateInput('Conical reduction needs a nonzero point')
    if sum(weights) > 1:
        raise error.DegenerateInput('Weights must sum to at most 1, not {}'.format(sum(weights)))
    indices, reduced = _eliminate(vectors, weights, dim, affine=False)
    if sum(reduced) > 1 or convex_combination(reduced, [vectors[i] for i in indices]) != x:
        raise error.InternalConsistencyError('Conical reduction lost the point {}'.format(x))
    return indices, reduced
