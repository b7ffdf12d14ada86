import itertools
from fractions import Fraction

from strictdom import error
from strictdom.games.game import Belief
from strictdom.geometry.polytope import probability_simplex
from strictdom.utils.numerals import to_rational
from .space import Space

DEFAULT_RESOLUTION = 10


def _compositions(total, parts):
    """All tuples of `parts` nonnegative integers summing to `total`, lexicographically."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class Simplex(Space):
    r"""The beliefs over n opponent actions: exact vectors q >= 0 with sum q = 1.

    Sampling draws from the grid of beliefs whose entries are multiples of
    1/resolution.

    Example::

        >>> Simplex(2, resolution=4).grid()[:2]
        [Belief(['0', '1']), Belief(['1/4', '3/4'])]

    """
    def __init__(self, n, resolution=DEFAULT_RESOLUTION):
        if n < 1:
            raise error.DimensionMismatch('A simplex needs at least one coordinate, not {}'.format(n))
        if resolution < 1:
            raise error.Error('Grid resolution must be at least 1, not {}'.format(resolution))
        self.resolution = resolution
        super(Simplex, self).__init__(n)

    def sample(self):
        k = self.resolution
        bars = sorted(self.np_random.choice(k + self.n - 1, self.n - 1, replace=False))
        edges = [-1] + [int(b) for b in bars] + [k + self.n - 1]
        return Belief([Fraction(edges[i + 1] - edges[i] - 1, k) for i in range(self.n)])

    def contains(self, x):
        try:
            probs = [to_rational(v) for v in x]
        except (error.Error, TypeError):
            return False
        return len(probs) == self.n and all(p >= 0 for p in probs) and sum(probs) == 1

    def grid(self, resolution=None):
        """Every belief with entries in {0, 1/k, ..., 1}, in lexicographic order."""
        k = self.resolution if resolution is None else resolution
        if k < 1:
            raise error.Error('Grid resolution must be at least 1, not {}'.format(k))
        return [Belief([Fraction(c, k) for c in counts]) for counts in _compositions(k, self.n)]

    def vertices(self):
        return [Belief([int(i == j) for j in range(self.n)]) for i in range(self.n)]

    def polytope(self):
        return probability_simplex(self.n)

    def point(self, values):
        return Belief(values)

    def __repr__(self):
        return "Simplex({}, resolution={})".format(self.n, self.resolution)

    def __eq__(self, other):
        return isinstance(other, Simplex) and (self.n, self.resolution) == (other.n, other.resolution)
