"""Side-by-side run of IESDS and iterated rationalizability."""
from collections import namedtuple

from strictdom import error, logger
from strictdom.dominance import iesds, reduce_support, verify_certificate
from strictdom.rationalizability.best_response import NbrCertificate, best_response_belief, \
    iterated_rationalizability, verify_nbr
from strictdom.rationalizability.constructive import constructive_mixture_from_nbr, subcover_mixture

# One eliminated action. `constructive` comes from the rotation merge over the
# full covering, `reduced` is its support reduction, `subcover` the merge
# over a minimal subcover.
EquivalenceEntry = namedtuple('EquivalenceEntry', ['player', 'action', 'round', 'nbr', 'constructive',
                                                   'reduced', 'subcover'])
EquivalenceReport = namedtuple('EquivalenceReport', ['survivors', 'iesds', 'rationalizability', 'entries'])


def _check_dominated_are_nbr(game, trace):
    survivors = {1: list(range(game.n)), 2: list(range(game.m))}
    for r in trace.rounds:
        for cert in r.certificates:
            result = best_response_belief(game, r.player, cert.dominated, survivors[r.player], cert.against)
            if not isinstance(result, NbrCertificate):
                raise error.InternalConsistencyError(
                    'Dominated action {} of player {} is a best response to {}'.format(
                        cert.dominated, r.player, result.belief))
        survivors[r.player] = [i for i in survivors[r.player] if i not in r.removed]


def _entry(game, player, number, nbr):
    constructive = constructive_mixture_from_nbr(game, player, nbr)
    reduced = reduce_support(game, player, constructive)
    subcover = subcover_mixture(game, player, nbr)
    if not verify_nbr(game, player, nbr):
        raise error.InternalConsistencyError('Covering for action {} does not verify'.format(nbr.action))
    for cert in (constructive, reduced, subcover):
        if not verify_certificate(game, player, cert):
            raise error.InternalConsistencyError('Certificate for action {} does not verify'.format(nbr.action))
    return EquivalenceEntry(player, nbr.action, number, nbr, constructive, reduced, subcover)


def equivalence_report(game):
    """Run both eliminations, require equal survivors, and attach to every
    removed action a covering certificate and three dominance certificates.

    Raises:
        InternalConsistencyError: if the two procedures disagree or any
            certificate fails to verify
    """
    trace = iesds(game)
    rationalizable = iterated_rationalizability(game)
    if trace.survivors != (rationalizable.rows, rationalizable.cols):
        raise error.InternalConsistencyError('IESDS survivors {} differ from rationalizable {}'.format(
            trace.survivors, (rationalizable.rows, rationalizable.cols)))
    _check_dominated_are_nbr(game, trace)

    entries = []
    for number, r in enumerate(rationalizable.rounds):
        for nbr in r.certificates:
            entries.append(_entry(game, r.player, number, nbr))
    logger.info('equivalence report: %d actions eliminated, survivors %s', len(entries), trace.survivors)
    return EquivalenceReport(trace.survivors, trace, rationalizable, tuple(entries))
