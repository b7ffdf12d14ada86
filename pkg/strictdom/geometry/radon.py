from collections import namedtuple

from strictdom import error
from strictdom.geometry.linalg import linear_dependence
from strictdom.geometry.vectors import as_point, common_dimension, convex_combination

RadonPartition = namedtuple('RadonPartition', ['part1', 'part2', 'witness', 'weights1', 'weights2'])


def radon_partition(points):
    """Split at least d+2 distinct points of R^d into two parts whose convex
    hulls meet, and return a point of the intersection.

    An affine dependence mu (sum mu_i x_i = 0, sum mu_i = 0) is computed;
    part1 holds the indices with mu_i > 0, part2 all the others, and with
    A = sum of the positive mu_i the witness is

        sum_{part1} (mu_i / A) x_i  =  sum_{part2} (-mu_i / A) x_i.
    """
    points = [as_point(p) for p in points]
    dim = common_dimension(points)
    if len(points) < dim + 2:
        raise error.DegenerateInput(
            'Radon partition needs at least {} points in dimension {}, got {}'.format(dim + 2, dim, len(points)))
    if len(set(points)) != len(points):
        raise error.DegenerateInput('Radon partition needs distinct points')

    mu = linear_dependence(points, affine=True)
    if mu is None:
        raise error.InternalConsistencyError('No affine dependence among {} points in R^{}'.format(len(points), dim))
    part1 = tuple(i for i, m in enumerate(mu) if m > 0)
    part2 = tuple(i for i, m in enumerate(mu) if m <= 0)
    total = sum(mu[i] for i in part1)
    weights1 = tuple(mu[i] / total for i in part1)
    weights2 = tuple(-mu[i] / total for i in part2)

    witness = convex_combination(weights1, [points[i] for i in part1])
    if convex_combination(weights2, [points[i] for i in part2]) != witness:
        raise error.InternalConsistencyError('Radon witness is not reconstructed by both parts')
    return RadonPartition(part1, part2, witness, weights1, weights2)
