"""Best responses over the belief simplex and never-best-response certificates."""
from collections import namedtuple
from fractions import Fraction

from strictdom import error, logger
from strictdom.dominance import player_view
from strictdom.games.game import Belief, payoff_vector
from strictdom.geometry import OpenHalfSpace, union_covers
from strictdom.geometry.vectors import dot, is_zero, sub
from strictdom.lp import EQ, GE, lp_feasible_point
from strictdom.spaces import Simplex

# slack: (j, E_i(belief) - E_j(belief)) for every other action j considered.
BestResponseWitness = namedtuple('BestResponseWitness', ['action', 'belief', 'slack'])

# covering: (j, half-space of beliefs where j strictly beats the action),
# over the `against` coordinates (all opponent actions when None).
NbrCertificate = namedtuple('NbrCertificate', ['action', 'covering', 'against'])

RationalizabilityRound = namedtuple('RationalizabilityRound', ['player', 'removed', 'certificates'])
RationalizabilityResult = namedtuple('RationalizabilityResult', ['rows', 'cols', 'rounds'])


def _opponents(view, against):
    return list(range(view.m)) if against is None else list(against)


def _normalize_against(view, against):
    if against is None:
        return None
    against = tuple(against)
    return None if against == tuple(range(view.m)) else against


def best_response_belief(game, player, i, own=None, against=None):
    """Find a belief at which action i is a best response.

    The beliefs range over the `against` opponent actions and i competes with
    the `own` actions (all of them by default). The system
    { q in simplex : (v_i - v_j) . q >= 0 for all j } is solved exactly.

    Returns:
        BestResponseWitness with the belief spread over all opponent actions,
        or an NbrCertificate when the system is infeasible
    """
    view = player_view(game, player)
    if not 0 <= i < view.n:
        raise error.InvalidGame('Player {} has no action {}'.format(player, i))
    own = [j for j in (range(view.n) if own is None else own) if j != i]
    opponents = _opponents(view, against)
    k = len(opponents)
    if k == 0:
        raise error.InvalidGame('Beliefs need at least one opponent action')
    v_i = payoff_vector(view, 1, i, opponents)

    differences = [(j, sub(v_i, payoff_vector(view, 1, j, opponents))) for j in own]
    constraints = [(d, GE, 0) for _, d in differences if not is_zero(d)]
    constraints.append(([1] * k, EQ, 1))
    q = lp_feasible_point(constraints, nonneg=range(k), dim=k)
    if q is not None:
        probs = [Fraction(0)] * view.m
        for coord, value in zip(opponents, q):
            probs[coord] = value
        slack = tuple((j, dot(d, q)) for j, d in differences)
        return BestResponseWitness(i, Belief(probs), slack)

    covering = tuple((j, OpenHalfSpace(d, 0)) for j, d in differences if not is_zero(d))
    logger.debug('action %d of player %d is never a best response (%d half-spaces)', i, player, len(covering))
    return NbrCertificate(i, covering, _normalize_against(view, against))


def verify_nbr(game, player, cert):
    """Exact check that every half-space is {q : (v_i - v_j) . q < 0} and that
    together they cover the belief simplex.
    """
    view = player_view(game, player)
    if not isinstance(cert, NbrCertificate) or not 0 <= cert.action < view.n:
        return False
    opponents = _opponents(view, cert.against)
    if not opponents or any(not 0 <= k < view.m for k in opponents):
        return False
    v_i = payoff_vector(view, 1, cert.action, opponents)
    for j, h in cert.covering:
        if j == cert.action or not 0 <= j < view.n:
            return False
        if h.offset != 0 or h.normal != sub(v_i, payoff_vector(view, 1, j, opponents)):
            return False
    if not cert.covering:
        return False
    return union_covers([h for _, h in cert.covering], Simplex(len(opponents)).polytope()).covered


def iterated_rationalizability(game):
    """Remove never-best-responses, scanning player 1 then player 2 and so on,
    until a scan of each player removes nothing.
    """
    survivors = {1: list(range(game.n)), 2: list(range(game.m))}
    rounds = []
    player, idle = 1, 0
    while idle < 2:
        opponent = 3 - player
        certificates = []
        if len(survivors[player]) > 1:
            for i in survivors[player]:
                result = best_response_belief(game, player, i, survivors[player], survivors[opponent])
                if isinstance(result, NbrCertificate):
                    certificates.append(result)
        if certificates:
            removed = tuple(c.action for c in certificates)
            survivors[player] = [i for i in survivors[player] if i not in removed]
            rounds.append(RationalizabilityRound(player, removed, tuple(certificates)))
            logger.info('rationalizability round %d: player %d removes %s', len(rounds), player,
                        [game.actions(player)[i] for i in removed])
            idle = 0
        else:
            idle += 1
        player = opponent
    return RationalizabilityResult(tuple(survivors[1]), tuple(survivors[2]), tuple(rounds))
