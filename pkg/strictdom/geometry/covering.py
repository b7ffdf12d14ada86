"""Coverings of polytopes by open half-spaces."""
from collections import namedtuple
from fractions import Fraction

from strictdom import error, logger
from strictdom.geometry.polytope import OpenHalfSpace
from strictdom.geometry.vectors import add, dot, scale
from strictdom.lp import LE, lp_feasible_point

# witness is None when covered, otherwise a point of P outside every half-space.
Coverage = namedtuple('Coverage', ['covered', 'witness'])


def _check_dims(halfspaces, P):
    for h in halfspaces:
        if h.dim != P.dim:
            raise error.DimensionMismatch(
                'Half-space of dimension {} against a polytope of dimension {}'.format(h.dim, P.dim))


def halfspace_covers(h, P):
    """Vertex criterion: a polytope lies in an open half-space iff all its vertices do."""
    _check_dims([h], P)
    return all(dot(h.normal, v) < h.offset for v in P.vertices())


def union_covers(halfspaces, P):
    """Decide whether the union of open half-spaces contains P.

    The uncovered region P minus the union is the polytope P intersected with
    every closed complement; it is empty iff the union covers.

    Returns:
        Coverage: (True, None), or (False, x) with x in P and
        normal . x >= offset for every half-space
    """
    halfspaces = list(halfspaces)
    _check_dims(halfspaces, P)
    constraints = [(normal, LE, offset) for normal, offset in P.constraints]
    constraints += [(normal, LE, offset) for normal, offset in (h.complement() for h in halfspaces)]
    witness = lp_feasible_point(constraints, dim=P.dim)
    if witness is None:
        return Coverage(True, None)
    return Coverage(False, witness)


def minimal_subcover(halfspaces, P):
    """Indices of a minimal sub-family that still covers P.

    One pass in index order drops every half-space whose removal keeps the
    cover; a half-space kept once stays necessary since the family only
    shrinks. The result is a minimal configuration: each member covers some
    point no other member covers, so there are at most dim(P) + 1 of them.

    Raises:
        NotCovered: if the family does not cover P in the first place
    """
    halfspaces = list(halfspaces)
    coverage = union_covers(halfspaces, P)
    if not coverage.covered:
        raise error.NotCovered('Half-spaces do not cover the polytope', coverage.witness)
    kept = list(range(len(halfspaces)))
    for i in range(len(halfspaces)):
        rest = [j for j in kept if j != i]
        if rest and union_covers([halfspaces[j] for j in rest], P).covered:
            kept = rest
    bound = P.dimension + 1
    if len(kept) > bound:
        raise error.InternalConsistencyError(
            'Minimal subcover of size {} exceeds dimension bound {}'.format(len(kept), bound))
    logger.debug('minimal_subcover: kept %s of %d', kept, len(halfspaces))
    return kept


def rotation_merge(a, b, S):
    """Rotate two homogeneous half-spaces covering S into one.

    Each vertex v of S restricts lambda to the open interval where
    lambda (a.v) + (1 - lambda) (b.v) < 0; the intersection of these
    intervals is nonempty whenever a and b jointly cover S, and its
    midpoint is returned.

    Returns:
        (lambda, merged): merged has normal lambda a + (1 - lambda) b,
        offset 0, and covers S on its own
    """
    if not (a.homogeneous and b.homogeneous):
        raise error.DegenerateInput('Rotation merge needs homogeneous half-spaces (offset 0)')
    coverage = union_covers([a, b], S)
    if not coverage.covered:
        raise error.NotCovered('The two half-spaces do not cover the polytope', coverage.witness)
    if halfspace_covers(a, S):
        return Fraction(1), a
    if halfspace_covers(b, S):
        return Fraction(0), b

    lo, hi = Fraction(0), Fraction(1)
    for v in S.vertices():
        alpha, beta = dot(a.normal, v), dot(b.normal, v)
        gap = alpha - beta
        if gap > 0:
            hi = min(hi, -beta / gap)
        elif gap < 0:
            lo = max(lo, -beta / gap)
        elif beta >= 0:
            lo, hi = Fraction(1), Fraction(0)
    if not lo < hi:
        raise error.InternalConsistencyError('Empty rotation interval [{}, {}]'.format(lo, hi))
    lam = (lo + hi) / 2
    merged = OpenHalfSpace(add(scale(lam, a.normal), scale(1 - lam, b.normal)), 0)
    if not halfspace_covers(merged, S):
        raise error.InternalConsistencyError('Merged half-space at lambda={} does not cover'.format(lam))
    logger.debug('rotation_merge: interval (%s, %s), lambda=%s', lo, hi, lam)
    return lam, merged
