"""Points are tuples of Fractions. These helpers keep every operation exact."""
from fractions import Fraction

from strictdom import error
from strictdom.utils.numerals import to_point

ZERO = Fraction(0)


def as_point(values):
    return to_point(values)


def common_dimension(points):
    """Dimension shared by all points; DimensionMismatch otherwise."""
    points = list(points)
    if not points:
        raise error.DegenerateInput('Expected at least one point')
    dim = len(points[0])
    for p in points:
        if len(p) != dim:
            raise error.DimensionMismatch('Points of dimension {} and {} mixed'.format(dim, len(p)))
    if dim == 0:
        raise error.DimensionMismatch('Points must have positive dimension')
    return dim


def dot(a, b):
    if len(a) != len(b):
        raise error.DimensionMismatch('Cannot take dot product of dimensions {} and {}'.format(len(a), len(b)))
    return sum((x * y for x, y in zip(a, b)), ZERO)


def add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a):
    return tuple(c * x for x in a)


def is_zero(a):
    return all(x == 0 for x in a)


def convex_combination(weights, points):
    """sum_i weights[i] * points[i], exactly. The weights need not sum to one."""
    points = list(points)
    dim = common_dimension(points)
    if len(weights) != len(points):
        raise error.DimensionMismatch('{} weights for {} points'.format(len(weights), len(points)))
    total = [ZERO] * dim
    for w, p in zip(weights, points):
        if w:
            for k in range(dim):
                total[k] += w * p[k]
    return tuple(total)


def dominates(u, v):
    """True iff u exceeds v strictly in every coordinate."""
    if len(u) != len(v):
        raise error.DimensionMismatch('Cannot compare dimensions {} and {}'.format(len(u), len(v)))
    return all(x > y for x, y in zip(u, v))
