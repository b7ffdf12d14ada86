"""Games in which the min(n - 1, m) support bound is attained.

The target action is dominated, but no mixture over fewer than
min(n - 1, m) of the other actions dominates it.
"""
from fractions import Fraction

from strictdom import error, logger
from strictdom.dominance import DominanceCertificate, verify_certificate
from strictdom.games.game import Game, MixedStrategy


def _tight_rows(n, m):
    if n - 1 < m:
        # n at its own coordinate, 0 at the other first n - 1, 1 beyond.
        rows = [[n if c == k else (0 if c < n - 1 else 1) for c in range(m)] for k in range(n - 1)]
        rows.append([1 if c < n - 1 else 0 for c in range(m)])
        return rows, n - 1
    rows = [[2 * m if c == k else 0 for c in range(m)] for k in range(m)]
    rows.append([1] * m)
    rows.extend([0] * m for _ in range(n - m - 1))
    return rows, m


def tight_instance(n, m):
    """Build the n x m tight game.

    Returns:
        (Game, int): the game and the index of the target action
    """
    if n < 2 or m < 2:
        raise error.InvalidGame('Tight instances need n, m >= 2, not n={}, m={}'.format(n, m))
    rows, target = _tight_rows(n, m)
    game = Game(['a{}'.format(i + 1) for i in range(n)], ['b{}'.format(j + 1) for j in range(m)],
                rows, [[0] * m for _ in range(n)], title='tight-{}x{}'.format(n, m))
    logger.info('tight instance %dx%d, target a%d', n, m, target + 1)
    return game, target


def tight_certificate(n, m):
    """The equal-weight mixture over the first min(n - 1, m) actions, which
    dominates the target of tight_instance(n, m).
    """
    game, target = tight_instance(n, m)
    size = min(n - 1, m)
    mixture = MixedStrategy([(k, Fraction(1, size)) for k in range(size)])
    gaps = [a - b for a, b in zip(mixture.payoff(game, 1), game.row_payoffs[target])]
    cert = DominanceCertificate(target, mixture, min(gaps))
    if not verify_certificate(game, 1, cert):
        raise error.InternalConsistencyError('Tight certificate for {}x{} does not verify'.format(n, m))
    return cert
