from strictdom.utils import seeding
from strictdom.utils.numerals import format_rational, to_point


class Space(object):
    """A set of exact points in n coordinates, e.g. the beliefs over an
    opponent's n actions.

    Sampling is seeded with 0 unless seed() is called, so two spaces built
    the same way draw the same points.
    """
    def __init__(self, n):
        self.n = n
        self.np_random = None
        self.seed()

    def sample(self):
        raise NotImplementedError

    def seed(self, seed=None):
        self.np_random, seed = seeding.np_random(0 if seed is None else seed)
        return [seed]

    def contains(self, x):
        raise NotImplementedError

    def __contains__(self, x):
        return self.contains(x)

    def point(self, values):
        """Build a member from a sequence of numerals."""
        return to_point(values)

    def to_jsonable(self, points):
        """Points as lists of "p/q" strings."""
        return [[format_rational(v) for v in p] for p in points]

    def from_jsonable(self, rows):
        return [self.point(row) for row in rows]
