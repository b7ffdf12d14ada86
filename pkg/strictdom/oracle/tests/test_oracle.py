from fractions import Fraction as F

import pytest

from strictdom import error, instances
from strictdom.dominance import DominanceCertificate, dominated_actions, reduce_support
from strictdom.games import Belief, Game, MixedStrategy
from strictdom.oracle import (SAMPLE_RESOLUTION, GridSpec, enumerate_min_support, grid_best_responses,
                              grid_check_nbr, verify_dominance_exhaustive)
from strictdom.oracle import oracle
from strictdom.rationalizability import NbrCertificate, equivalence_report
from strictdom.spaces import Simplex

FIG1 = instances.make('fig1')
FIVE_LINES = instances.make('five-lines')
TWO_ROWS = Game(['x', 'y'], ['l', 'r'], [[2, 2], [1, 1]], [[0, 0], [0, 0]])
ENSEMBLE = instances.random_ensemble(15, max_n=6, seed=11)


@pytest.mark.parametrize("game,player,i,expected", [
    (FIG1, 1, 2, 2),
    (FIG1, 1, 0, None),
    (TWO_ROWS, 1, 1, 1),
    (instances.make('vec3x2'), 1, 2, 2),
    (instances.make('prisoners-dilemma'), 2, 0, 1),
    (FIVE_LINES, 1, 3, 2),
])
def test_enumerate_min_support(game, player, i, expected):
    assert enumerate_min_support(game, player, i) == expected


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("m", range(2, 6))
def test_tight_instances_attain_the_bound(n, m):
    game, target = instances.tight_instance(n, m)
    assert enumerate_min_support(game, 1, target) == min(n - 1, m)
    reduced = reduce_support(game, 1, instances.tight_certificate(n, m))
    assert len(reduced.mixture) <= min(n - 1, m)


def test_enumeration_cap():
    game, target = instances.tight_instance(13, 2)
    with pytest.raises(error.Error):
        enumerate_min_support(game, 1, target)
    with pytest.warns(UserWarning):
        assert enumerate_min_support(game, 1, target, max_actions=13) == 2


@pytest.mark.parametrize("resolution", [0, -3, True, 1.5])
def test_grid_spec_validation(resolution):
    with pytest.raises(error.Error):
        GridSpec(resolution)


@pytest.mark.parametrize("samples", [-1, True, 2.0])
def test_grid_spec_rejects_sample_counts(samples):
    with pytest.raises(error.Error):
        GridSpec(10, samples)


def test_grid_spec_samples():
    grid = GridSpec(4, samples=25, seed=9)
    beliefs = grid.beliefs(3)
    assert beliefs[:15] == Simplex(3, 4).grid()
    assert len(beliefs) == 40
    assert all(q in Simplex(3) and all((p * SAMPLE_RESOLUTION).denominator == 1 for p in q) for q in beliefs)
    assert grid.beliefs(3) == beliefs
    assert GridSpec(4, samples=25, seed=10).beliefs(3) != beliefs
    with pytest.raises(error.InvalidSeed):
        GridSpec(4, samples=1, seed=-1).beliefs(3)


def test_grid_check_nbr():
    assert grid_check_nbr(FIG1, 1, 2, GridSpec(100)).consistent
    assert grid_check_nbr(FIG1, 1, 2, GridSpec(10, samples=200, seed=1)).consistent
    assert grid_check_nbr(FIVE_LINES, 1, 0, GridSpec(10)) == (True, None)
    assert grid_check_nbr(Game(['a'], ['b'], [[0]], [[0]]), 1, 0, GridSpec(1)) == (True, None)


def test_grid_best_responses_five_lines():
    beliefs = grid_best_responses(FIVE_LINES, 1, 0, GridSpec(10))
    assert beliefs == [Belief((F(k, 10), F(10 - k, 10))) for k in range(6, 11)]
    assert beliefs[-1] == Belief((1, 0))


def test_grid_check_finds_counterexample(monkeypatch):
    monkeypatch.setattr(oracle, 'best_response_belief', lambda game, player, i: NbrCertificate(i, (), None))
    with pytest.warns(UserWarning):
        check = grid_check_nbr(FIG1, 1, 0, GridSpec(10))
    assert not check.consistent
    assert check.counterexample == Belief((F(3, 5), F(2, 5)))


@pytest.mark.parametrize("game,cert,expected", [
    (FIG1, DominanceCertificate(2, MixedStrategy([(0, F(1, 3)), (1, F(2, 3))]), F(1, 3)), True),
    (FIG1, DominanceCertificate(2, MixedStrategy([(0, F(9, 10)), (1, F(1, 10))]), F(1, 3)), False),
    (TWO_ROWS, DominanceCertificate(1, MixedStrategy.point_mass(0), 1), True),
    (FIG1, DominanceCertificate(2, MixedStrategy.point_mass(1), 2, (1,)), True),
    (FIG1, DominanceCertificate(2, MixedStrategy.point_mass(2), 1), False),
    (FIG1, DominanceCertificate(2, MixedStrategy.point_mass(4), 1), False),
])
def test_verify_dominance_exhaustive(game, cert, expected):
    assert verify_dominance_exhaustive(game, 1, cert) == expected


@pytest.mark.parametrize("game", ENSEMBLE, ids=lambda g: g.title)
def test_oracle_agrees_with_pipeline(game):
    for player in (1, 2):
        n, m = (game.n, game.m) if player == 1 else (game.m, game.n)
        dominated = {c.dominated: c for c in dominated_actions(game, player)}
        for i in range(n):
            minimum = enumerate_min_support(game, player, i)
            assert (minimum is not None) == (i in dominated)
            if minimum is not None:
                assert minimum <= min(n - 1, m)
                reduced = reduce_support(game, player, dominated[i])
                assert minimum <= len(reduced.mixture) <= min(n - 1, m)
                assert verify_dominance_exhaustive(game, player, reduced)
            assert grid_check_nbr(game, player, i, GridSpec(6, samples=20)).consistent


@pytest.mark.parametrize("game", ENSEMBLE, ids=lambda g: g.title)
def test_report_certificates_pass_exhaustive_check(game):
    for entry in equivalence_report(game).entries:
        for cert in (entry.constructive, entry.reduced, entry.subcover):
            assert verify_dominance_exhaustive(game, entry.player, cert, GridSpec(5, samples=10))
