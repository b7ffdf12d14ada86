from fractions import Fraction as F

import pytest

from strictdom import instances
from strictdom.dominance import iesds
from strictdom.games import Game, expected_payoff, transpose
from strictdom.geometry import OpenHalfSpace
from strictdom.rationalizability import (BestResponseWitness, NbrCertificate, best_response_belief,
                                         iterated_rationalizability, verify_nbr)

FIG1 = instances.make('fig1')
FIVE_LINES = instances.make('five-lines')


def test_fig1_d_is_never_a_best_response():
    result = best_response_belief(FIG1, 1, 2)
    assert isinstance(result, NbrCertificate)
    assert result.action == 2 and result.against is None
    assert result.covering == ((0, OpenHalfSpace((-3, 3))), (1, OpenHalfSpace((1, -2))))
    assert verify_nbr(FIG1, 1, result)


def test_five_lines_a1_witness():
    result = best_response_belief(FIVE_LINES, 1, 0)
    assert isinstance(result, BestResponseWitness)
    q = result.belief
    assert F(4, 7) <= q.probs[0] <= 1
    best = expected_payoff(FIVE_LINES, 1, 0, q)
    for j, slack in result.slack:
        assert slack == best - expected_payoff(FIVE_LINES, 1, j, q)
        assert slack >= 0
    assert [j for j, _ in result.slack] == [1, 2, 3, 4]


@pytest.mark.parametrize("i,rationalizable", [(0, True), (1, True), (2, True), (3, False), (4, False)])
def test_five_lines_verdicts(i, rationalizable):
    result = best_response_belief(FIVE_LINES, 1, i)
    assert isinstance(result, BestResponseWitness) == rationalizable


def test_single_action_is_a_best_response():
    g = Game(['only'], ['l', 'r'], [[0, 1]], [[2, 3]])
    result = best_response_belief(g, 1, 0)
    assert isinstance(result, BestResponseWitness)
    assert result.slack == ()
    assert sum(result.belief) == 1


def test_identical_actions_are_both_best_responses():
    g = Game(['x', 'y'], ['l', 'r'], [[1, 2], [1, 2]], [[0, 0], [0, 0]])
    for i in (0, 1):
        result = best_response_belief(g, 1, i)
        assert isinstance(result, BestResponseWitness)
        assert result.slack == ((1 - i, 0),)


def test_belief_restricted_to_survivors():
    result = best_response_belief(FIG1, 1, 2, against=[1])
    assert isinstance(result, NbrCertificate)
    assert result.against == (1,)
    assert result.covering == ((0, OpenHalfSpace((3,))), (1, OpenHalfSpace((-2,))))
    assert verify_nbr(FIG1, 1, result)
    witness = best_response_belief(FIG1, 1, 0, against=[0])
    assert witness.belief.probs == (1, 0)


def test_player_two_via_transpose():
    t = transpose(FIG1)
    assert best_response_belief(t, 2, 2) == best_response_belief(FIG1, 1, 2)


@pytest.mark.parametrize("cert", [
    NbrCertificate(2, ((0, OpenHalfSpace((-3, 3))),), None),
    NbrCertificate(2, ((0, OpenHalfSpace((-3, 4))), (1, OpenHalfSpace((1, -2)))), None),
    NbrCertificate(2, ((2, OpenHalfSpace((1, 1))), (1, OpenHalfSpace((1, -2)))), None),
    NbrCertificate(2, (), None),
    NbrCertificate(2, ((0, OpenHalfSpace((-3, 3))), (1, OpenHalfSpace((1, -2)))), (0, 5)),
])
def test_verify_nbr_rejects(cert):
    assert not verify_nbr(FIG1, 1, cert)


@pytest.mark.parametrize("name,rows,cols", [
    ('fig1', (0, 1), (0, 1)),
    ('five-lines', (0, 1, 2), (0, 1)),
    ('vec3x2', (0, 1), (0, 1)),
    ('prisoners-dilemma', (1,), (1,)),
])
def test_iterated_rationalizability(name, rows, cols):
    result = iterated_rationalizability(instances.make(name))
    assert (result.rows, result.cols) == (rows, cols)


def test_rationalizability_rounds_mirror_iesds():
    g = instances.make('prisoners-dilemma')
    result = iterated_rationalizability(g)
    assert [(r.player, r.removed) for r in result.rounds] == [(1, (0,)), (2, (0,))]
    assert result.rounds[1].certificates[0].against == (1,)
    pennies = Game(['H', 'T'], ['H', 'T'], [[1, -1], [-1, 1]], [[-1, 1], [1, -1]])
    assert iterated_rationalizability(pennies).rounds == ()


@pytest.mark.parametrize("game", instances.random_ensemble(30, seed=3), ids=lambda g: g.title)
def test_dominated_actions_are_never_best_responses(game):
    trace = iesds(game)
    survivors = {1: list(range(game.n)), 2: list(range(game.m))}
    for r in trace.rounds:
        for cert in r.certificates:
            result = best_response_belief(game, r.player, cert.dominated, survivors[r.player], cert.against)
            assert isinstance(result, NbrCertificate), "{} is a best response".format(cert.dominated)
        survivors[r.player] = [i for i in survivors[r.player] if i not in r.removed]
