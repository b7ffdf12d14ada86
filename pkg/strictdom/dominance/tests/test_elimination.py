import pytest

from strictdom import instances
from strictdom.dominance import dominated_actions, iesds, random_elimination, verify_certificate
from strictdom.games import Game, normalize_positive

ENSEMBLE = instances.random_ensemble(50)


def test_iesds_fig1():
    trace = iesds(instances.make('fig1'))
    assert len(trace.rounds) == 1
    assert trace.rounds[0].player == 1
    assert trace.rounds[0].removed == (2,)
    assert trace.survivors == ((0, 1), (0, 1))


def test_iesds_prisoners_dilemma():
    trace = iesds(instances.make('prisoners-dilemma'))
    assert [(r.player, r.removed) for r in trace.rounds] == [(1, (0,)), (2, (0,))]
    assert trace.survivors == ((1,), (1,))


def test_iesds_nothing_dominated():
    pennies = Game(['H', 'T'], ['H', 'T'], [[1, -1], [-1, 1]], [[-1, 1], [1, -1]])
    trace = iesds(pennies)
    assert trace.rounds == ()
    assert trace.survivors == ((0, 1), (0, 1))


@pytest.mark.parametrize("game", ENSEMBLE[:20], ids=lambda g: g.title)
def test_iesds_certificates_hold_in_their_round(game):
    trace = iesds(game)
    survivors = {1: set(range(game.n)), 2: set(range(game.m))}
    for r in trace.rounds:
        for cert in r.certificates:
            assert set(cert.against) == survivors[3 - r.player]
            assert set(cert.mixture.support) <= survivors[r.player]
            assert verify_certificate(game, r.player, cert)
        survivors[r.player] -= set(r.removed)
    assert trace.survivors == (tuple(sorted(survivors[1])), tuple(sorted(survivors[2])))
    assert trace.survivors[0] and trace.survivors[1]


@pytest.mark.parametrize("game", ENSEMBLE, ids=lambda g: g.title)
def test_elimination_order_independence(game):
    survivors = iesds(game).survivors
    for seed in range(20):
        assert random_elimination(game, seed) == survivors, "Order {} disagrees".format(seed)


@pytest.mark.parametrize("game", ENSEMBLE, ids=lambda g: g.title)
def test_shift_invariance(game):
    survivors = iesds(game).survivors
    for player in (1, 2):
        shifted, _ = normalize_positive(game, player)
        assert iesds(shifted).survivors == survivors
        assert [c.dominated for c in dominated_actions(shifted, player)] == \
            [c.dominated for c in dominated_actions(game, player)]
