"""Open half-spaces and bounded H-polytopes over exact rationals."""
import functools
import itertools
from fractions import Fraction

from strictdom import error, logger
from strictdom.geometry.linalg import rank, solve_square
from strictdom.geometry.vectors import as_point, dot, is_zero, sub
from strictdom.lp import LE, OPTIMAL, LinearProgram, lp_feasible_point, lp_maximize


class OpenHalfSpace(object):
    """The open half-space { x : normal . x < offset }."""
    def __init__(self, normal, offset=0):
        self.normal = as_point(normal)
        self.offset = Fraction(offset)
        if not self.normal:
            raise error.DimensionMismatch('A half-space needs a normal of positive dimension')
        if is_zero(self.normal):
            raise error.DegenerateInput('A half-space needs a nonzero normal')

    @property
    def dim(self):
        return len(self.normal)

    @property
    def homogeneous(self):
        return self.offset == 0

    def contains(self, x):
        return dot(self.normal, as_point(x)) < self.offset

    def __contains__(self, x):
        return self.contains(x)

    def complement(self):
        """The closed complement normal . x >= offset, as a <= constraint."""
        return tuple(-a for a in self.normal), -self.offset

    def __eq__(self, other):
        return isinstance(other, OpenHalfSpace) and (self.normal, self.offset) == (other.normal, other.offset)

    def __hash__(self):
        return hash((self.normal, self.offset))

    def __repr__(self):
        return 'OpenHalfSpace({}, {})'.format([str(a) for a in self.normal], self.offset)


def _as_constraint(c):
    normal, offset = c
    return as_point(normal), Fraction(offset)


class Polytope(object):
    """A bounded, nonempty polytope { x : normal . x <= offset for every constraint }.

    Lower-dimensional polytopes are fine: an implicit equality is a pair of
    opposing inequalities, as in the probability simplex.

    Args:
        constraints: iterable of (normal, offset) pairs
        dim: ambient dimension; only needed when it cannot be read off the
            constraints
        validate: check feasibility and boundedness with LPs; off only for
            constraint sets already known to be both
    """
    def __init__(self, constraints, dim=None, validate=True):
        self.constraints = tuple(_as_constraint(c) for c in constraints)
        if dim is None:
            if not self.constraints:
                raise error.InvalidPolytope('An unconstrained polytope is unbounded')
            dim = len(self.constraints[0][0])
        self.dim = int(dim)
        if self.dim <= 0:
            raise error.DimensionMismatch('Polytope dimension must be positive, not {}'.format(dim))
        for normal, _ in self.constraints:
            if len(normal) != self.dim:
                raise error.DimensionMismatch(
                    'Constraint of dimension {} in a polytope of dimension {}'.format(len(normal), self.dim))
        if validate:
            if lp_feasible_point(self._lp_constraints(), dim=self.dim) is None:
                raise error.InvalidPolytope('Constraint set is infeasible')
            self._check_bounded()
        self._vertices = None

    def _lp_constraints(self, extra=()):
        return [(normal, LE, offset) for normal, offset in self.constraints + tuple(extra)]

    def _check_bounded(self):
        for k in range(self.dim):
            for sign in (1, -1):
                objective = [0] * self.dim
                objective[k] = sign
                outcome = lp_maximize(LinearProgram(objective, self._lp_constraints()))
                if outcome.status != OPTIMAL:
                    raise error.InvalidPolytope('Constraint set is unbounded along coordinate {}'.format(k))

    def vertices(self):
        if self._vertices is None:
            self._vertices = polytope_vertices(self)
        return list(self._vertices)

    @property
    def dimension(self):
        """Dimension of the affine hull, from the vertices."""
        vertices = self.vertices()
        if len(vertices) == 1:
            return 0
        return rank([sub(v, vertices[0]) for v in vertices[1:]])

    def contains(self, x):
        x = as_point(x)
        return all(dot(normal, x) <= offset for normal, offset in self.constraints)

    def __contains__(self, x):
        return self.contains(x)

    def intersect(self, constraints):
        """The polytope cut by extra (normal, offset) constraints, or None if empty.

        A cut of a bounded polytope is bounded, so only feasibility is checked.
        """
        extra = tuple(_as_constraint(c) for c in constraints)
        for normal, _ in extra:
            if len(normal) != self.dim:
                raise error.DimensionMismatch(
                    'Constraint of dimension {} in a polytope of dimension {}'.format(len(normal), self.dim))
        if lp_feasible_point(self._lp_constraints(extra), dim=self.dim) is None:
            return None
        return Polytope(self.constraints + extra, self.dim, validate=False)

    def __repr__(self):
        return 'Polytope(dim={}, constraints={})'.format(self.dim, len(self.constraints))


@functools.lru_cache(maxsize=None)
def probability_simplex(m):
    """The belief simplex { q in R^m : q >= 0, sum q = 1 }, of dimension m - 1.

    Polytopes are never mutated, so one instance per m is shared.
    """
    if m < 1:
        raise error.DimensionMismatch('A simplex needs at least one coordinate, not {}'.format(m))
    constraints = []
    for k in range(m):
        normal = [0] * m
        normal[k] = -1
        constraints.append((normal, 0))
    constraints.append(([1] * m, 1))
    constraints.append(([-1] * m, -1))
    return Polytope(constraints, m)


def polytope_vertices(P):
    """Exact vertex set of a bounded polytope, sorted lexicographically.

    Every choice of d constraints is solved as a square system of equalities;
    the nonsingular solutions that satisfy all constraints are the vertices.
    """
    if not isinstance(P, Polytope):
        raise error.InvalidPolytope('Expected a Polytope, got {}'.format(type(P).__name__))
    found = set()
    normals = [normal for normal, _ in P.constraints]
    opposing = set((i, j) for i, j in itertools.combinations(range(len(normals)), 2)
                   if normals[i] == tuple(-a for a in normals[j]))
    for chosen in itertools.combinations(range(len(normals)), P.dim):
        # Opposing normals make the system singular.
        if any(pair in opposing for pair in itertools.combinations(chosen, 2)):
            continue
        subset = [P.constraints[k] for k in chosen]
        x = solve_square([normal for normal, _ in subset], [offset for _, offset in subset])
        if x is not None and P.contains(x):
            found.add(x)
    if not found:
        raise error.InternalConsistencyError('Feasible bounded polytope without vertices: {}'.format(P))
    logger.debug('polytope_vertices: %d vertices from %d constraints', len(found), len(P.constraints))
    return sorted(found)
