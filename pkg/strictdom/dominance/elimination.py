"""Iterated elimination of strictly dominated strategies."""
from collections import namedtuple

from strictdom import logger
from strictdom.dominance.dominance import dominated_actions, find_dominating_mixture
from strictdom.utils import seeding

# certificates hold original indices, with `against` set to the opponent's
# survivors of that round.
EliminationRound = namedtuple('EliminationRound', ['player', 'removed', 'certificates'])
EliminationTrace = namedtuple('EliminationTrace', ['rounds', 'survivors'])


def iesds(game):
    """Scan player 1, then player 2, and so on, removing every action that is
    strictly dominated within the current survivors; stop once a scan of
    each player removes nothing.
    """
    survivors = {1: list(range(game.n)), 2: list(range(game.m))}
    rounds = []
    player, idle = 1, 0
    while idle < 2:
        opponent = 3 - player
        certificates = dominated_actions(game, player, survivors[player], survivors[opponent])
        if certificates:
            removed = tuple(c.dominated for c in certificates)
            survivors[player] = [i for i in survivors[player] if i not in removed]
            rounds.append(EliminationRound(player, removed, tuple(certificates)))
            logger.info('iesds round %d: player %d removes %s', len(rounds), player,
                        [game.actions(player)[i] for i in removed])
            idle = 0
        else:
            idle += 1
        player = opponent
    return EliminationTrace(tuple(rounds), (tuple(survivors[1]), tuple(survivors[2])))


def random_elimination(game, seed=0):
    """Remove dominated actions one at a time in a seeded random order.

    Returns:
        (rows, cols): the surviving indices of each player, which do not
        depend on the order
    """
    rng, _ = seeding.np_random(seed)
    survivors = {1: list(range(game.n)), 2: list(range(game.m))}
    while True:
        candidates = [(p, i) for p in (1, 2) for i in survivors[p] if len(survivors[p]) > 1]
        for idx in rng.permutation(len(candidates)):
            player, i = candidates[int(idx)]
            others = [j for j in survivors[player] if j != i]
            if find_dominating_mixture(game, player, i, others, survivors[3 - player]) is not None:
                survivors[player].remove(i)
                logger.debug('random elimination: player %d removes %d', player, i)
                break
        else:
            return tuple(survivors[1]), tuple(survivors[2])
