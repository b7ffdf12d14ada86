from fractions import Fraction as F

import numpy as np
import pytest

from strictdom import error
from strictdom.games import (Belief, Game, MixedStrategy, expected_payoff, normalize_positive,
                             payoff_vector, transpose)

FIG1 = Game(['U', 'M', 'D'], ['L', 'R'], [[6, 0], [2, 5], [3, 3]], [[1, 3], [1, 0], [2, 1]])
FIVE_LINES = Game(['a1', 'a2', 'a3', 'a4', 'a5'], ['b1', 'b2'],
                  [['8/5', '2/5'], [0, '13/10'], ['13/10', '4/5'], ['1/5', 1], ['4/5', '4/5']],
                  [[0, 0]] * 5)


def test_payoffs_are_exact_and_frozen():
    g = Game(['a'], ['b'], [['1.2']], [['6/5']])
    assert g.row_payoffs[0, 0] == F(6, 5)
    assert isinstance(g.row_payoffs[0, 0], F)
    assert g.row_payoffs[0, 0] == g.col_payoffs[0, 0]
    with pytest.raises(ValueError):
        g.row_payoffs[0, 0] = 1


@pytest.mark.parametrize("kwargs", [
    dict(row_actions=['a', 'b'], col_actions=['x'], row_payoffs=[[1], [2, 3]], col_payoffs=[[0], [0]]),
    dict(row_actions=['a', 'a'], col_actions=['x'], row_payoffs=[[1], [2]], col_payoffs=[[0], [0]]),
    dict(row_actions=[], col_actions=['x'], row_payoffs=[], col_payoffs=[]),
    dict(row_actions=['a'], col_actions=['x'], row_payoffs=[[0.5]], col_payoffs=[[0]]),
])
def test_invalid_games(kwargs):
    with pytest.raises(error.InvalidGame):
        Game(**kwargs)


@pytest.mark.parametrize("player,action,expected", [
    (1, 0, (6, 0)),
    (2, 0, (1, 1, 2)),
    (2, 1, (3, 0, 1)),
])
def test_payoff_vector(player, action, expected):
    assert payoff_vector(FIG1, player, action) == expected


def test_payoff_vector_single_cell():
    g = Game(['a'], ['b'], [[7]], [[-7]])
    assert payoff_vector(g, 1, 0) == (7,)
    assert payoff_vector(g, 2, 0) == (-7,)
    with pytest.raises(error.InvalidGame):
        payoff_vector(g, 1, 1)


def test_expected_payoff():
    assert expected_payoff(FIG1, 1, 0, (1, 0)) == 6
    for q in (F(0), F(1, 3), F(1, 2), F(1)):
        assert expected_payoff(FIG1, 1, 2, (q, 1 - q)) == 3
    assert expected_payoff(FIVE_LINES, 1, 0, (F(1, 2), F(1, 2))) == 1
    with pytest.raises(error.DimensionMismatch):
        expected_payoff(FIG1, 1, 0, (F(1, 3), F(1, 3), F(1, 3)))


def test_expected_payoff_is_affine():
    q, r, lam = Belief((F(1, 5), F(4, 5))), Belief((F(2, 3), F(1, 3))), F(3, 7)
    mix = tuple(lam * a + (1 - lam) * b for a, b in zip(q, r))
    for i in range(FIVE_LINES.n):
        assert expected_payoff(FIVE_LINES, 1, i, mix) == \
            lam * expected_payoff(FIVE_LINES, 1, i, q) + (1 - lam) * expected_payoff(FIVE_LINES, 1, i, r)


@pytest.mark.parametrize("payoffs,c,shifted", [
    ([[0, -2], [1, 3]], 3, [[3, 1], [4, 6]]),
    ([[1, 2], [3, 4]], 1, [[2, 3], [4, 5]]),
    ([['-1/2', 0]], F(3, 2), [[1, F(3, 2)]]),
])
def test_normalize_positive(payoffs, c, shifted):
    n, m = len(payoffs), len(payoffs[0])
    g = Game(['r{}'.format(i) for i in range(n)], ['c{}'.format(j) for j in range(m)], payoffs,
             [[5] * m] * n)
    normalized, constant = normalize_positive(g, 1)
    assert constant == c
    assert normalized.row_payoffs.tolist() == shifted
    assert np.array_equal(normalized.col_payoffs, g.col_payoffs)
    normalized, constant = normalize_positive(g, 2)
    assert constant == 1
    assert np.array_equal(normalized.row_payoffs, g.row_payoffs)


def test_transpose():
    t = transpose(FIG1)
    assert t.row_actions == ('L', 'R')
    assert t.row_payoffs.tolist() == [[1, 1, 2], [3, 0, 1]]
    assert transpose(t) == FIG1
    single = Game(['a'], ['b'], [[1]], [[2]])
    assert transpose(single) == Game(['b'], ['a'], [[2]], [[1]])


def test_restrict_and_action_index():
    sub = FIG1.restrict([0, 1], [1])
    assert sub.row_actions == ('U', 'M') and sub.col_actions == ('R',)
    assert sub.row_payoffs.tolist() == [[0], [5]]
    assert FIG1.action_index(1, 'D') == 2
    assert FIG1.action_index(2, 'R') == 1
    with pytest.raises(error.InvalidGame):
        FIG1.action_index(1, 'L')


def test_belief_validation():
    assert Belief(['1/3', '2/3']).probs == (F(1, 3), F(2, 3))
    with pytest.raises(error.InvalidMixture):
        Belief([F(1, 2), F(1, 3)])
    with pytest.raises(error.InvalidMixture):
        Belief([F(3, 2), F(-1, 2)])


def test_mixed_strategy():
    s = MixedStrategy([(1, F(2, 3)), (0, F(1, 3))])
    assert s.support == (0, 1)
    assert s.payoff(FIG1, 1) == (F(10, 3), F(10, 3))
    assert s.as_vector(3) == (F(1, 3), F(2, 3), 0)
    assert MixedStrategy.from_vector([0, F(1, 2), F(1, 2)]).support == (1, 2)
    assert MixedStrategy.point_mass(2).weights == ((2, 1),)
    for weights in ([], [(0, 1), (0, 0)], [(0, F(1, 2)), (1, F(1, 3))], [(0, 2), (1, -1)]):
        with pytest.raises(error.InvalidMixture):
            MixedStrategy(weights)
    with pytest.raises(error.InvalidMixture):
        MixedStrategy.point_mass(5).payoff(FIG1, 1)
