"""Finite two-player games with exact payoffs.

Payoff matrices are numpy object arrays of ``fractions.Fraction``; they are
made read-only at construction so a Game can be shared freely. Player 1
chooses rows, player 2 chooses columns. Everything that analyses player 2
runs the player-1 code on ``transpose(game)``.
"""
from fractions import Fraction

import numpy as np

from strictdom import error
from strictdom.utils.numerals import to_rational

PLAYERS = (1, 2)


def _payoff_matrix(rows, n, m, label):
    try:
        rows = [list(r) for r in rows]
    except TypeError:
        raise error.InvalidGame('{} must be a list of rows'.format(label))
    if len(rows) != n or any(len(r) != m for r in rows):
        raise error.InvalidGame('{} must be a {}x{} matrix, got row lengths {}'.format(
            label, n, m, [len(r) for r in rows]))
    matrix = np.empty((n, m), dtype=object)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            matrix[i, j] = to_rational(v)
    matrix.setflags(write=False)
    return matrix


def _action_names(names, label):
    names = tuple(str(a) for a in names)
    if not names:
        raise error.InvalidGame('{} must not be empty'.format(label))
    if len(set(names)) != len(names):
        raise error.InvalidGame('{} contains duplicate names: {}'.format(label, list(names)))
    return names


def check_player(player):
    if player not in PLAYERS:
        raise error.InvalidGame('Player must be 1 or 2, not {!r}'.format(player))
    return player


class Game(object):
    """A bimatrix game.

    Args:
        row_actions: names of player 1's actions (n of them)
        col_actions: names of player 2's actions (m of them)
        row_payoffs: n x m payoffs of player 1
        col_payoffs: n x m payoffs of player 2
        title: optional free-text label, kept through serialization
    """
    def __init__(self, row_actions, col_actions, row_payoffs, col_payoffs, title=None):
        self.row_actions = _action_names(row_actions, 'row_actions')
        self.col_actions = _action_names(col_actions, 'col_actions')
        n, m = len(self.row_actions), len(self.col_actions)
        self.row_payoffs = _payoff_matrix(row_payoffs, n, m, 'row_payoffs')
        self.col_payoffs = _payoff_matrix(col_payoffs, n, m, 'col_payoffs')
        self.title = title

    @property
    def n(self):
        return len(self.row_actions)

    @property
    def m(self):
        return len(self.col_actions)

    @property
    def shape(self):
        return self.n, self.m

    def actions(self, player):
        return self.row_actions if check_player(player) == 1 else self.col_actions

    def action_index(self, player, name):
        try:
            return self.actions(player).index(name)
        except ValueError:
            raise error.InvalidGame('Player {} has no action named {!r}; actions are {}'.format(
                player, name, list(self.actions(player))))

    def restrict(self, rows, cols):
        """The sub-game on the given row and column indices (in the given order)."""
        rows, cols = list(rows), list(cols)
        return Game([self.row_actions[i] for i in rows], [self.col_actions[j] for j in cols],
                    self.row_payoffs[np.ix_(rows, cols)], self.col_payoffs[np.ix_(rows, cols)],
                    title=self.title)

    def __eq__(self, other):
        return (isinstance(other, Game)
                and self.row_actions == other.row_actions
                and self.col_actions == other.col_actions
                and np.array_equal(self.row_payoffs, other.row_payoffs)
                and np.array_equal(self.col_payoffs, other.col_payoffs)
                and self.title == other.title)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return 'Game({}x{}{})'.format(self.n, self.m, ', {!r}'.format(self.title) if self.title else '')


class Belief(object):
    """A probability vector over the opponent's actions."""
    def __init__(self, probs):
        self.probs = tuple(to_rational(p) for p in probs)
        if not self.probs:
            raise error.DimensionMismatch('A belief needs at least one coordinate')
        if any(p < 0 for p in self.probs) or sum(self.probs) != 1:
            raise error.InvalidMixture('Belief must be nonnegative and sum to 1: {}'.format(
                [str(p) for p in self.probs]))

    def __len__(self):
        return len(self.probs)

    def __iter__(self):
        return iter(self.probs)

    def __eq__(self, other):
        return isinstance(other, Belief) and self.probs == other.probs

    def __hash__(self):
        return hash(self.probs)

    def __repr__(self):
        return 'Belief({})'.format([str(p) for p in self.probs])


class MixedStrategy(object):
    """Probability weights over a support of one player's actions.

    Args:
        weights: iterable of (action index, weight); every weight is
            strictly positive and they sum to one
    """
    def __init__(self, weights):
        weights = tuple((int(i), to_rational(w)) for i, w in weights)
        if not weights:
            raise error.InvalidMixture('A mixed strategy needs a nonempty support')
        indices = [i for i, _ in weights]
        if len(set(indices)) != len(indices) or min(indices) < 0:
            raise error.InvalidMixture('Support indices must be distinct and nonnegative: {}'.format(indices))
        if any(w <= 0 for _, w in weights):
            raise error.InvalidMixture('Support weights must be strictly positive')
        if sum(w for _, w in weights) != 1:
            raise error.InvalidMixture('Weights sum to {}, not 1'.format(sum(w for _, w in weights)))
        self.weights = tuple(sorted(weights))

    @classmethod
    def point_mass(cls, i):
        return cls([(i, 1)])

    @classmethod
    def from_vector(cls, vector):
        """Mixed strategy from a full probability vector; zero entries are dropped."""
        return cls([(i, w) for i, w in enumerate(vector) if to_rational(w) != 0])

    @property
    def support(self):
        return tuple(i for i, _ in self.weights)

    def weight(self, i):
        return dict(self.weights).get(i, Fraction(0))

    def as_vector(self, size):
        vector = [Fraction(0)] * size
        for i, w in self.weights:
            vector[i] = w
        return tuple(vector)

    def check(self, game, player):
        size = game.n if check_player(player) == 1 else game.m
        if max(self.support) >= size:
            raise error.InvalidMixture('Support {} out of range for {} actions'.format(list(self.support), size))

    def payoff(self, game, player, against=None):
        """The mixture's payoff vector sum_j w_j v_j, over the `against` opponent actions."""
        self.check(game, player)
        vectors = [payoff_vector(game, player, i, against) for i in self.support]
        return tuple(sum((w * v[k] for (_, w), v in zip(self.weights, vectors)), Fraction(0))
                     for k in range(len(vectors[0])))

    def __len__(self):
        return len(self.weights)

    def __eq__(self, other):
        return isinstance(other, MixedStrategy) and self.weights == other.weights

    def __hash__(self):
        return hash(self.weights)

    def __repr__(self):
        return 'MixedStrategy({})'.format(', '.join('{}: {}'.format(i, w) for i, w in self.weights))


def _player_matrix(game, player):
    return game.row_payoffs if check_player(player) == 1 else game.col_payoffs.T


def payoff_vector(game, player, action, against=None):
    """The exact payoffs of one action against every opponent action.

    Row `action` of player 1's matrix, or column `action` of player 2's. If
    `against` is given, only those opponent coordinates are kept, in order.
    """
    matrix = _player_matrix(game, player)
    if not 0 <= action < matrix.shape[0]:
        raise error.InvalidGame('Player {} has no action {}'.format(player, action))
    row = matrix[action]
    if against is not None:
        row = row[list(against)]
    return tuple(row)


def expected_payoff(game, player, action, belief):
    if not isinstance(belief, Belief):
        belief = Belief(belief)
    vector = payoff_vector(game, player, action)
    if len(vector) != len(belief):
        raise error.DimensionMismatch('Belief of dimension {} against {} opponent actions'.format(
            len(belief), len(vector)))
    return sum((a * q for a, q in zip(vector, belief)), Fraction(0))


def normalize_positive(game, player):
    """Shift one player's payoffs by c = 1 + max(0, -min) so they are all >= 1.

    Returns:
        (Game, Fraction): the shifted game and the constant c
    """
    matrix = game.row_payoffs if check_player(player) == 1 else game.col_payoffs
    c = 1 + max(Fraction(0), -min(matrix.flat))
    shifted = matrix + c
    if player == 1:
        return Game(game.row_actions, game.col_actions, shifted, game.col_payoffs, game.title), c
    return Game(game.row_actions, game.col_actions, game.row_payoffs, shifted, game.title), c


def transpose(game):
    """Swap the players' roles."""
    return Game(game.col_actions, game.row_actions, game.col_payoffs.T, game.row_payoffs.T, game.title)
