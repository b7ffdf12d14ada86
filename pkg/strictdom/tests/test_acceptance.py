"""End-to-end checks on the worked examples and a 200-game random ensemble."""
import time
from fractions import Fraction as F

import pytest

from strictdom import instances
from strictdom.dominance import (DominanceCertificate, find_dominating_mixture, iesds, make_certificate,
                                 reduce_support, verify_certificate)
from strictdom.games import MixedStrategy
from strictdom.oracle import enumerate_min_support
from strictdom.rationalizability import (BestResponseWitness, NbrCertificate, best_response_belief,
                                         equivalence_report, iterated_rationalizability, verify_nbr)

ENSEMBLE = instances.random_ensemble(200)


def test_fig1():
    g = instances.make('fig1')
    cert = find_dominating_mixture(g, 1, 2)
    assert cert.mixture.weights == ((0, F(1, 3)), (1, F(2, 3)))
    assert cert.margin == F(1, 3)
    assert enumerate_min_support(g, 1, 2) == 2
    assert iesds(g).survivors == ((0, 1), (0, 1))
    result = iterated_rationalizability(g)
    assert (result.rows, result.cols) == ((0, 1), (0, 1))


@pytest.mark.parametrize("weights,target", [
    ([(0, '1/5'), (1, '7/10'), (2, '1/10')], 3),
    ([(0, '1/5'), (1, '3/10'), (2, '1/2')], 4),
    ([(0, '3/10'), (1, '7/10')], 3),
])
def test_five_lines_certificates(weights, target):
    g = instances.make('five-lines')
    cert = make_certificate(g, 1, MixedStrategy(weights), target)
    assert verify_certificate(g, 1, cert)
    reduced = reduce_support(g, 1, cert)
    assert len(reduced.mixture) <= 2
    assert verify_certificate(g, 1, reduced)


def test_five_lines_pair_line():
    # 0.3 a1 + 0.7 a2 is the line 1.03 - 0.55 q, above a4's 1 - 0.8 q on [0, 1].
    g = instances.make('five-lines')
    u = MixedStrategy([(0, '3/10'), (1, '7/10')]).payoff(g, 1)
    assert u == (F(48, 100), F(103, 100))
    assert u[0] - u[1] == F(-55, 100)


def test_five_lines_verdicts():
    g = instances.make('five-lines')
    for i in (0, 1, 2):
        assert isinstance(best_response_belief(g, 1, i), BestResponseWitness)
    for i in (3, 4):
        nbr = best_response_belief(g, 1, i)
        assert isinstance(nbr, NbrCertificate) and verify_nbr(g, 1, nbr)
        assert isinstance(find_dominating_mixture(g, 1, i), DominanceCertificate)


@pytest.fixture(scope='module')
def ensemble_reports():
    start = time.perf_counter()
    reports = [equivalence_report(game) for game in ENSEMBLE]
    return reports, time.perf_counter() - start


def test_ensemble_runs_within_a_minute(ensemble_reports):
    reports, elapsed = ensemble_reports
    assert len(reports) == len(ENSEMBLE)
    assert elapsed < 60, '200 equivalence reports took {:.1f}s'.format(elapsed)


@pytest.mark.parametrize("index", range(len(ENSEMBLE)), ids=[g.title for g in ENSEMBLE])
def test_equivalence_on_random_games(index, ensemble_reports):
    game, report = ENSEMBLE[index], ensemble_reports[0][index]
    rationalizable = report.rationalizability
    assert report.iesds.survivors == (rationalizable.rows, rationalizable.cols)
    removed = sum(len(r.removed) for r in report.iesds.rounds)
    assert len(report.entries) == removed
    for entry in report.entries:
        assert verify_nbr(game, entry.player, entry.nbr)
        own, opponents = (game.n, game.m) if entry.player == 1 else (game.m, game.n)
        k = opponents if entry.nbr.against is None else len(entry.nbr.against)
        for cert in (entry.constructive, entry.reduced, entry.subcover):
            assert verify_certificate(game, entry.player, cert)
        assert len(entry.reduced.mixture) <= min(own - 1, k)
        assert len(entry.subcover.mixture) <= min(own - 1, k)
