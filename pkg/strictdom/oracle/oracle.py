"""Brute-force cross-checks for the dominance and best-response pipeline.

These run independently of the covering geometry: subsets are enumerated
outright and beliefs are tried on a finite grid. The grid check is one-sided,
since a grid that misses every belief at which an action is a best response
says nothing; the vertex check in verify_dominance_exhaustive is complete.
A GridSpec may add seeded random beliefs on a much finer grid.
"""
import itertools
from collections import namedtuple

from strictdom import error, logger
from strictdom.dominance import DominanceCertificate, find_dominating_mixture, player_view
from strictdom.games.game import MixedStrategy, payoff_vector
from strictdom.geometry.vectors import dot
from strictdom.rationalizability import NbrCertificate, best_response_belief
from strictdom.spaces import Simplex

DEFAULT_MAX_ACTIONS = 12
DEFAULT_RESOLUTION = 10
SAMPLE_RESOLUTION = 1000

# counterexample is None when consistent, otherwise a grid belief at which
# an action reported as never a best response is a weak best response.
GridCheck = namedtuple('GridCheck', ['consistent', 'counterexample'])


class GridSpec(namedtuple('GridSpec', ['resolution', 'samples', 'seed'])):
    """Beliefs whose entries are multiples of 1/resolution, followed by
    `samples` random beliefs with entries in multiples of 1/SAMPLE_RESOLUTION,
    drawn from a Simplex seeded with `seed`.
    """
    __slots__ = ()

    def __new__(cls, resolution=DEFAULT_RESOLUTION, samples=0, seed=0):
        if isinstance(resolution, bool) or not isinstance(resolution, int) or resolution < 1:
            raise error.Error('Grid resolution must be a positive integer, not {!r}'.format(resolution))
        if isinstance(samples, bool) or not isinstance(samples, int) or samples < 0:
            raise error.Error('Sample count must be a non-negative integer, not {!r}'.format(samples))
        return super(GridSpec, cls).__new__(cls, resolution, samples, seed)

    def beliefs(self, m):
        beliefs = Simplex(m, self.resolution).grid()
        if self.samples:
            space = Simplex(m, SAMPLE_RESOLUTION)
            space.seed(self.seed)
            beliefs += [space.sample() for _ in range(self.samples)]
        return beliefs


def enumerate_min_support(game, player, i, max_actions=DEFAULT_MAX_ACTIONS):
    """Smallest support of any mixture strictly dominating action i, found by
    trying every subset of the other actions in order of increasing size.

    Returns:
        int, or None if no mixture dominates i
    """
    view = player_view(game, player)
    if not 0 <= i < view.n:
        raise error.InvalidGame('Player {} has no action {}'.format(player, i))
    if max_actions != DEFAULT_MAX_ACTIONS:
        logger.warn('Subset enumeration cap raised from %d to %d', DEFAULT_MAX_ACTIONS, max_actions)
    if view.n > max_actions:
        raise error.Error('Player {} has {} actions, above the enumeration cap of {}'.format(
            player, view.n, max_actions))
    others = [j for j in range(view.n) if j != i]
    for size in range(1, len(others) + 1):
        for subset in itertools.combinations(others, size):
            if find_dominating_mixture(view, 1, i, subset) is not None:
                logger.debug('min support for action %d is %d via %s', i, size, subset)
                return size
    return None


def _is_weak_best_response(vectors, i, belief):
    values = [dot(v, belief.probs) for v in vectors]
    return values[i] >= max(values)


def grid_best_responses(game, player, i, grid=GridSpec()):
    """Grid beliefs at which action i is a weak best response."""
    view = player_view(game, player)
    if not 0 <= i < view.n:
        raise error.InvalidGame('Player {} has no action {}'.format(player, i))
    vectors = [payoff_vector(view, 1, j) for j in range(view.n)]
    return [q for q in grid.beliefs(view.m) if _is_weak_best_response(vectors, i, q)]


def grid_check_nbr(game, player, i, grid=GridSpec()):
    """Search the grid for a belief contradicting a never-best-response verdict.

    An action the pipeline finds to be a best response is consistent by
    definition. Passing says nothing about beliefs off the grid.
    """
    if not isinstance(best_response_belief(game, player, i), NbrCertificate):
        return GridCheck(True, None)
    found = grid_best_responses(game, player, i, grid)
    if found:
        logger.warn('action %d of player %d is a best response to grid belief %s', i, player, found[0])
        return GridCheck(False, found[0])
    return GridCheck(True, None)


def verify_dominance_exhaustive(game, player, cert, grid=GridSpec()):
    """Check a dominance certificate at every vertex of the belief simplex over
    its `against` actions, and again at every belief of the grid.
    """
    if not isinstance(cert, DominanceCertificate) or not isinstance(cert.mixture, MixedStrategy):
        return False
    view = player_view(game, player)
    if not 0 <= cert.dominated < view.n or max(cert.mixture.support) >= view.n:
        return False
    against = list(range(view.m)) if cert.against is None else list(cert.against)
    if not against or any(not 0 <= k < view.m for k in against):
        return False
    if cert.dominated in cert.mixture.support:
        return False
    u = cert.mixture.payoff(view, 1, against)
    v = payoff_vector(view, 1, cert.dominated, against)
    for q in Simplex(len(against)).vertices() + grid.beliefs(len(against)):
        if not dot(u, q.probs) > dot(v, q.probs):
            logger.debug('certificate for action %d fails at belief %s', cert.dominated, q)
            return False
    return True
