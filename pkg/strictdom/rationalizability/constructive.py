"""From a never-best-response covering to a dominating mixture.

Each half-space of an NbrCertificate is {q : (v_i - v_j) . q < 0} and carries
the point mass on j. Rotating two of them into one gives the half-space of a
mixture: lambda (v_i - v_a) + (1 - lambda) (v_i - v_b) = v_i - (lambda v_a +
(1 - lambda) v_b). Repeating until one half-space is left yields a mixture
whose payoff beats v_i at every belief, hence in every coordinate.
"""
from fractions import Fraction

from strictdom import error, logger
from strictdom.dominance import make_certificate, player_view, verify_certificate
from strictdom.games.game import MixedStrategy
from strictdom.geometry import minimal_subcover, rotation_merge, union_covers
from strictdom.rationalizability.best_response import NbrCertificate, verify_nbr
from strictdom.spaces import Simplex


def _unit(size, j):
    weights = [Fraction(0)] * size
    weights[j] = Fraction(1)
    return tuple(weights)


def _merge_all(work, simplex):
    """Merge a list of (half-space, weights) pairs that covers `simplex` down to one."""
    steps = 0
    while len(work) > 1:
        (a, wa), (b, wb), rest = work[0], work[1], work[2:]
        region = simplex.intersect([h.complement() for h, _ in rest])
        if region is None:
            work = rest
            logger.debug('merge step %d: remaining half-spaces cover, dropping a pair', steps)
        else:
            lam, merged = rotation_merge(a, b, region)
            weights = tuple(lam * x + (1 - lam) * y for x, y in zip(wa, wb))
            work = [(merged, weights)] + rest
            logger.debug('merge step %d: lambda=%s, %d half-spaces left', steps, lam, len(work))
        steps += 1
        if not union_covers([h for h, _ in work], simplex).covered:
            raise error.InternalConsistencyError('Half-spaces stopped covering after merge step {}'.format(steps))
        if any(w < 0 for _, ws in work for w in ws) or any(sum(ws) != 1 for _, ws in work):
            raise error.InternalConsistencyError('Merged weights left the simplex after step {}'.format(steps))
    return work[0]


def _merged_certificate(game, player, cert, covering):
    view = player_view(game, player)
    k = view.m if cert.against is None else len(cert.against)
    simplex = Simplex(k).polytope()
    work = [(h, _unit(view.n, j)) for j, h in covering]
    _, weights = _merge_all(work, simplex)
    mixture = MixedStrategy.from_vector(weights)
    dominance = make_certificate(view, 1, mixture, cert.action, cert.against)
    if not verify_certificate(view, 1, dominance):
        raise error.InternalConsistencyError(
            'Merged mixture {} does not dominate action {}'.format(mixture, cert.action))
    return dominance


def constructive_mixture_from_nbr(game, player, cert):
    """Turn a never-best-response certificate into a dominance certificate by
    rotation merges, always taking the first two half-spaces of the working
    list. A pair made redundant by the others is dropped instead of merged.

    Raises:
        InvalidCertificate: if the covering does not verify
    """
    if not verify_nbr(game, player, cert):
        raise error.InvalidCertificate('Covering for action {} does not verify'.format(cert.action))
    return _merged_certificate(game, player, cert, cert.covering)


def subcover_mixture(game, player, cert):
    """Like constructive_mixture_from_nbr, but merge only a minimal subcover.

    The belief simplex over k opponent actions has dimension k - 1, so the
    subcover and the resulting support hold at most k actions.
    """
    if not verify_nbr(game, player, cert):
        raise error.InvalidCertificate('Covering for action {} does not verify'.format(cert.action))
    view = player_view(game, player)
    k = view.m if cert.against is None else len(cert.against)
    kept = minimal_subcover([h for _, h in cert.covering], Simplex(k).polytope())
    subcover = tuple(cert.covering[idx] for idx in kept)
    dominance = _merged_certificate(game, player, NbrCertificate(cert.action, subcover, cert.against), subcover)
    bound = min(view.n - 1, k)
    if len(dominance.mixture) > bound:
        raise error.InternalConsistencyError(
            'Subcover mixture has support {} above the bound {}'.format(len(dominance.mixture), bound))
    return dominance
