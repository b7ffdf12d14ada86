"""Seeded random games, identical on every platform.

Payoffs come from utils.seeding.Lcg64: player 1's matrix is filled row by
row first, then player 2's, each entry drawn as lo + (state >> 33) mod
(hi - lo + 1).
"""
import numbers

from strictdom import error
from strictdom.games.game import Game
from strictdom.utils import seeding

LCG_MULTIPLIER = seeding.LCG_MULTIPLIER
LCG_INCREMENT = seeding.LCG_INCREMENT

DEFAULT_RANGE = (-9, 9)


def random_game(n, m, seed=0, lo=DEFAULT_RANGE[0], hi=DEFAULT_RANGE[1]):
    if n < 1 or m < 1:
        raise error.InvalidGame('Random games need n, m >= 1, not n={}, m={}'.format(n, m))
    for bound in (lo, hi):
        if isinstance(bound, bool) or not isinstance(bound, numbers.Integral):
            raise error.Error('Payoff bounds must be integers, not {!r}'.format(bound))
    if hi < lo:
        raise error.Error('Invalid payoff range: lo={} > hi={}'.format(lo, hi))
    rng, seed = seeding.lcg_random(seed)
    row_payoffs = [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]
    col_payoffs = [[rng.randint(lo, hi) for _ in range(m)] for _ in range(n)]
    return Game(['a{}'.format(i + 1) for i in range(n)], ['b{}'.format(j + 1) for j in range(m)],
                row_payoffs, col_payoffs, title='random-{}x{}-seed{}'.format(n, m, seed))


def random_ensemble(count, max_n=8, max_m=4, lo=DEFAULT_RANGE[0], hi=DEFAULT_RANGE[1], seed=0):
    """`count` random games with 2 <= n <= max_n and 2 <= m <= max_m.

    Shapes and per-game seeds are sampled with seeding.np_random, so the
    ensemble is fixed for a given numpy; payoffs still come from the LCG.
    """
    rng, _ = seeding.np_random(seed)
    games = []
    for _ in range(count):
        n = int(rng.randint(2, max_n + 1))
        m = int(rng.randint(2, max_m + 1))
        games.append(random_game(n, m, int(rng.randint(0, 2 ** 31)), lo, hi))
    return games
