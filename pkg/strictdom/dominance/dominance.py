"""Strict dominance by pure and mixed strategies, with exact certificates.

Every function takes a (game, player) pair. Player 2 is handled by running
the player-1 code on the transposed game, so indices always refer to the
analysed player's own actions and `against` to the opponent's.
"""
from collections import namedtuple

from strictdom import error, logger
from strictdom.games.game import MixedStrategy, check_player, normalize_positive, payoff_vector, transpose
from strictdom.geometry import caratheodory_conical_bounded, dominates
from strictdom.lp import GE, OPTIMAL, LinearProgram, lp_maximize

# against: the opponent actions the certificate ranges over, None for all.
DominanceCertificate = namedtuple('DominanceCertificate', ['dominated', 'mixture', 'margin', 'against'],
                                  defaults=(None,))


def player_view(game, player):
    """The game seen from `player` as the row player."""
    return game if check_player(player) == 1 else transpose(game)


def _opponents(view, against):
    return list(range(view.m)) if against is None else list(against)


def _check_action(view, player, i):
    if not 0 <= i < view.n:
        raise error.InvalidGame('Player {} has no action {}'.format(player, i))


def _gaps(view, mixture, i, against):
    u = mixture.payoff(view, 1, against)
    v = payoff_vector(view, 1, i, against)
    return tuple(a - b for a, b in zip(u, v))


def pure_dominates(game, player, i, j, against=None):
    """True iff action j strictly dominates action i."""
    view = player_view(game, player)
    _check_action(view, player, i)
    _check_action(view, player, j)
    if i == j:
        raise error.InvalidGame('An action cannot be compared with itself ({})'.format(i))
    return dominates(payoff_vector(view, 1, j, against), payoff_vector(view, 1, i, against))


def pure_dominators(game, player, i, against=None):
    view = player_view(game, player)
    return [j for j in range(view.n) if j != i and pure_dominates(view, 1, i, j, against)]


def fold_out(mixture, i):
    """Drop action i from a mixture and renormalize the rest, or None if
    nothing else is left.
    """
    p = mixture.weight(i)
    if p == 0:
        return mixture
    if p == 1:
        return None
    return MixedStrategy([(j, w / (1 - p)) for j, w in mixture.weights if j != i])


def mixed_dominates(game, player, mixture, i, against=None):
    """True iff the mixture's payoff vector strictly exceeds action i's in
    every opponent coordinate. If i is in the support it is folded out first.
    """
    view = player_view(game, player)
    _check_action(view, player, i)
    mixture.check(view, 1)
    mixture = fold_out(mixture, i)
    if mixture is None:
        return False
    return all(gap > 0 for gap in _gaps(view, mixture, i, _opponents(view, against)))


def verify_certificate(game, player, cert):
    """Exact check: margin > 0, i outside the support, and every gap >= margin."""
    view = player_view(game, player)
    if not isinstance(cert, DominanceCertificate) or not isinstance(cert.mixture, MixedStrategy):
        return False
    if not 0 <= cert.dominated < view.n or cert.margin <= 0 or cert.dominated in cert.mixture.support:
        return False
    if max(cert.mixture.support) >= view.n:
        return False
    against = _opponents(view, cert.against)
    if not against or any(not 0 <= k < view.m for k in against):
        return False
    return all(gap >= cert.margin for gap in _gaps(view, cert.mixture, cert.dominated, against))


def make_certificate(game, player, mixture, i, against=None):
    """Certificate for `mixture` against action i with the exact minimal gap as
    margin. The result need not verify: the margin is <= 0 when the mixture
    does not dominate.
    """
    view = player_view(game, player)
    opponents = _opponents(view, against)
    margin = min(_gaps(view, mixture, i, opponents))
    return DominanceCertificate(i, mixture, margin, None if against is None else tuple(opponents))


def find_dominating_mixture(game, player, i, allowed=None, against=None):
    """Search a mixture over `allowed` that strictly dominates action i.

    Solves: max eps s.t. sum_j p_j u(j, k) >= u(i, k) + eps for every
    opponent action k, with p a probability vector over `allowed`.

    Returns:
        DominanceCertificate with margin eps* if eps* > 0, else None
    """
    view = player_view(game, player)
    _check_action(view, player, i)
    allowed = sorted(set(range(view.n) if allowed is None else allowed) - {i})
    if not allowed:
        raise error.InvalidMixture('No candidate actions to dominate action {} with'.format(i))
    opponents = _opponents(view, against)
    if not opponents:
        raise error.InvalidGame('Cannot test dominance against an empty set of opponent actions')

    size = len(allowed)
    constraints = []
    for k in opponents:
        normal = [view.row_payoffs[j, k] for j in allowed] + [-1]
        constraints.append((normal, GE, view.row_payoffs[i, k]))
    constraints.append(([1] * size + [0], '==', 1))
    objective = [0] * size + [1]
    outcome = lp_maximize(LinearProgram(objective, constraints, nonneg=range(size)))
    if outcome.status != OPTIMAL:
        raise error.InternalConsistencyError('Dominance LP for action {} ended {}'.format(i, outcome.status))
    if outcome.value <= 0:
        logger.debug('action %d not dominated: eps* = %s', i, outcome.value)
        return None
    mixture = MixedStrategy([(j, p) for j, p in zip(allowed, outcome.solution[:size]) if p > 0])
    cert = make_certificate(view, 1, mixture, i, against)
    if cert.margin != outcome.value:
        raise error.InternalConsistencyError('Margin {} differs from LP optimum {}'.format(cert.margin, outcome.value))
    return cert


def dominated_actions(game, player, among=None, against=None):
    """Certificates for every action in `among` dominated by a mixture of the others."""
    view = player_view(game, player)
    among = list(range(view.n)) if among is None else sorted(among)
    if len(among) < 2:
        return []
    found = []
    for i in among:
        cert = find_dominating_mixture(view, 1, i, [j for j in among if j != i], against)
        if cert is not None:
            found.append(cert)
    return found


def reduce_support(game, player, cert):
    """Shrink a certificate's support to at most min(n - 1, m) actions.

    The payoffs are shifted positive, the mixture's payoff vector u is
    rewritten by the bounded conical reduction with at most m vectors and
    weight sum s <= 1, and the weights are scaled by 1/s, which can only
    raise u since every payoff is positive.
    """
    if not verify_certificate(game, player, cert):
        raise error.InvalidCertificate('Certificate for action {} does not verify'.format(cert.dominated))
    view = player_view(game, player)
    against = _opponents(view, cert.against)
    normalized, c = normalize_positive(view.restrict(range(view.n), against), 1)
    support = cert.mixture.support
    vectors = [payoff_vector(normalized, 1, j) for j in support]
    weights = [w for _, w in cert.mixture.weights]
    u = tuple(sum(w * v[k] for w, v in zip(weights, vectors)) for k in range(len(against)))

    indices, reduced = caratheodory_conical_bounded(u, vectors, weights)
    s = sum(reduced)
    mixture = fold_out(MixedStrategy([(support[idx], w / s) for idx, w in zip(indices, reduced)]), cert.dominated)
    reduced_cert = make_certificate(view, 1, mixture, cert.dominated, cert.against)
    if not verify_certificate(view, 1, reduced_cert):
        raise error.InternalConsistencyError('Reduced certificate for action {} does not verify'.format(cert.dominated))
    bound = min(view.n - 1, len(against))
    if len(mixture) > bound:
        raise error.InternalConsistencyError('Reduced support {} exceeds the bound {}'.format(len(mixture), bound))
    logger.debug('reduce_support: action %d, support %d -> %d (shift %s)',
                 cert.dominated, len(cert.mixture), len(mixture), c)
    return reduced_cert
