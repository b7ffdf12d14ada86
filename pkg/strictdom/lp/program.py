from collections import namedtuple

from strictdom import error
from strictdom.utils.numerals import to_point, to_rational

OPTIMAL = 'optimal'
INFEASIBLE = 'infeasible'
UNBOUNDED = 'unbounded'

LE = '<='
EQ = '=='
GE = '>='

_RELATIONS = {'<=': LE, '=': EQ, '==': EQ, '>=': GE}

# solution is the optimal point, or the improving ray when unbounded;
# value is only set when optimal.
LpOutcome = namedtuple('LpOutcome', ['status', 'solution', 'value'])

Constraint = namedtuple('Constraint', ['normal', 'relation', 'offset'])


def constraint(normal, relation, offset):
    """Build a validated constraint ``normal . x  relation  offset``."""
    if relation not in _RELATIONS:
        raise error.InvalidProgram('Unknown relation {!r}; use one of <=, ==, >='.format(relation))
    return Constraint(to_point(normal), _RELATIONS[relation], to_rational(offset))


class LinearProgram(object):
    """Maximize ``objective . x`` subject to linear constraints.

    Args:
        objective: coefficients of the objective, one per variable
        constraints: iterable of (normal, relation, offset) triples
        nonneg: indices of the variables constrained to be >= 0; all the
            other variables are free
    """
    def __init__(self, objective, constraints=(), nonneg=()):
        self.objective = to_point(objective)
        self.dim = len(self.objective)
        if self.dim == 0:
            raise error.InvalidProgram('A linear program needs at least one variable')
        self.constraints = tuple(
            c if isinstance(c, Constraint) else constraint(*c) for c in constraints)
        for c in self.constraints:
            if len(c.normal) != self.dim:
                raise error.InvalidProgram(
                    'Constraint normal has dimension {}, objective has {}'.format(len(c.normal), self.dim))
        self.nonneg = tuple(sorted(set(int(j) for j in nonneg)))
        for j in self.nonneg:
            if not 0 <= j < self.dim:
                raise error.InvalidProgram('Non-negativity index {} out of range'.format(j))

    def is_feasible_point(self, x):
        """Exact check of every constraint at x."""
        if len(x) != self.dim:
            return False
        if any(x[j] < 0 for j in self.nonneg):
            return False
        for c in self.constraints:
            lhs = sum(a * v for a, v in zip(c.normal, x))
            if c.relation == LE and not lhs <= c.offset:
                return False
            if c.relation == GE and not lhs >= c.offset:
                return False
            if c.relation == EQ and lhs != c.offset:
                return False
        return True

    def __repr__(self):
        return 'LinearProgram(dim={}, constraints={})'.format(self.dim, len(self.constraints))
