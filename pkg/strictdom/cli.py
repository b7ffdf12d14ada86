"""Command-line front-end.

Every subcommand reads its inputs, runs one analysis and writes either a JSON
report (sorted keys, rationals as "p/q") or CSV plot data to stdout or to
--output. Exit codes: 0 success, 1 when the requested finding is absent
(an undominated action, a family that does not cover, a certificate that
fails to verify), 2 for input errors, 3 when an internal consistency check
fails.
"""
import argparse
import csv
import hashlib
import io
import sys
import time
from fractions import Fraction

from strictdom import error, logger
from strictdom.dominance import (DominanceCertificate, dominated_actions, find_dominating_mixture, iesds,
                                 player_view, pure_dominators, reduce_support, verify_certificate)
from strictdom.games import MixedStrategy, expected_payoff, parse_game, payoff_vector, serialize_game
from strictdom.geometry import OpenHalfSpace, Polytope, minimal_subcover
from strictdom.instances import FIXTURE, RANDOM, TIGHT, GeneratorSpec, generate
from strictdom.oracle import verify_dominance_exhaustive
from strictdom.spaces import Simplex
from strictdom.rationalizability import (BestResponseWitness, NbrCertificate, best_response_belief,
                                         equivalence_report, iterated_rationalizability, verify_nbr)
from strictdom.utils import json_utils
from strictdom.utils.atomic_write import atomic_write
from strictdom.utils.numerals import format_rational, to_point, to_rational

EXIT_OK = 0
EXIT_ABSENT = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


# Encoding
# ----------------------------------------

def _names(game, player, indices):
    actions = game.actions(player)
    return [actions[i] for i in indices]


def _against_names(game, player, against):
    return None if against is None else _names(game, 3 - player, against)


def encode_certificate(game, player, cert):
    return {
        'kind': 'dominance',
        'player': player,
        'dominated': game.actions(player)[cert.dominated],
        'mixture': [[game.actions(player)[i], format_rational(w)] for i, w in cert.mixture.weights],
        'margin': format_rational(cert.margin),
        'against': _against_names(game, player, cert.against),
    }


def encode_nbr(game, player, cert):
    return {
        'kind': 'nbr',
        'player': player,
        'action': game.actions(player)[cert.action],
        'covering': [{'action': game.actions(player)[j], 'normal': [format_rational(a) for a in h.normal]}
                     for j, h in cert.covering],
        'against': _against_names(game, player, cert.against),
    }


def encode_witness(game, player, witness):
    return {
        'kind': 'best_response',
        'player': player,
        'action': game.actions(player)[witness.action],
        'belief': Simplex(len(witness.belief)).to_jsonable([witness.belief])[0],
        'slack': [[game.actions(player)[j], format_rational(s)] for j, s in witness.slack],
    }


def _survivors(game, rows, cols):
    return {'rows': _names(game, 1, rows), 'cols': _names(game, 2, cols)}


def _encode_trace(game, trace):
    return {
        'rounds': [{'player': r.player, 'removed': _names(game, r.player, r.removed),
                    'certificates': [encode_certificate(game, r.player, c) for c in r.certificates]}
                   for r in trace.rounds],
        'survivors': _survivors(game, *trace.survivors),
    }


def _encode_rationalizability(game, result):
    return {
        'rounds': [{'player': r.player, 'removed': _names(game, r.player, r.removed),
                    'certificates': [encode_nbr(game, r.player, c) for c in r.certificates]}
                   for r in result.rounds],
        'survivors': _survivors(game, result.rows, result.cols),
    }


# Decoding
# ----------------------------------------

def _indices(game, player, names):
    return [game.action_index(player, name) for name in names]


def decode_certificate(game, data):
    player = data['player']
    against = data.get('against')
    mixture = MixedStrategy([(game.action_index(player, name), w) for name, w in data['mixture']])
    return player, DominanceCertificate(
        game.action_index(player, data['dominated']), mixture, to_rational(data['margin']),
        None if against is None else tuple(_indices(game, 3 - player, against)))


def decode_nbr(game, data):
    player = data['player']
    against = data.get('against')
    covering = tuple((game.action_index(player, c['action']), OpenHalfSpace(c['normal']))
                     for c in data['covering'])
    return player, NbrCertificate(game.action_index(player, data['action']), covering,
                                  None if against is None else tuple(_indices(game, 3 - player, against)))


def _witness_holds(game, data):
    player = data['player']
    view = player_view(game, player)
    i = game.action_index(player, data['action'])
    belief, = Simplex(view.m).from_jsonable([data['belief']])
    best = expected_payoff(view, 1, i, belief)
    for name, slack in data['slack']:
        slack = to_rational(slack)
        if slack < 0 or best - expected_payoff(view, 1, game.action_index(player, name), belief) != slack:
            return False
    return True


def _collect(node, kinds):
    if isinstance(node, dict):
        if node.get('kind') in kinds:
            yield node
        for value in node.values():
            for found in _collect(value, kinds):
                yield found
    elif isinstance(node, list):
        for item in node:
            for found in _collect(item, kinds):
                yield found


def verify_report(game, report):
    """Re-verify every certificate embedded anywhere in a report.

    Returns:
        (int, list): the number of certificates checked and descriptions of
        those that failed
    """
    checked, failures = 0, []
    for data in _collect(report, ('dominance', 'nbr', 'best_response')):
        checked += 1
        try:
            if data['kind'] == 'dominance':
                player, cert = decode_certificate(game, data)
                ok = verify_certificate(game, player, cert) and verify_dominance_exhaustive(game, player, cert)
            elif data['kind'] == 'nbr':
                player, cert = decode_nbr(game, data)
                ok = verify_nbr(game, player, cert)
            else:
                ok = _witness_holds(game, data)
        except (KeyError, TypeError, ValueError) as e:
            raise error.InvalidCertificate('Malformed certificate in report: {}'.format(e))
        except (error.InvalidGame, error.InvalidMixture, error.DegenerateInput, error.DimensionMismatch) as e:
            logger.debug('certificate rejected while decoding: %s', e)
            ok = False
        if not ok:
            failures.append('{} certificate for {}'.format(data['kind'], data.get('dominated', data.get('action'))))
    return checked, failures


# Commands
# ----------------------------------------

def _read(path):
    try:
        with open(path, 'rb') as f:
            return f.read()
    except (IOError, OSError) as e:
        raise error.Error('Cannot read {}: {}'.format(path, e))


def _load_game(path):
    data = _read(path)
    return parse_game(data), hashlib.sha256(data).hexdigest()


def _report(command, digest, results, status='ok'):
    report = {'command': command, 'status': status, 'results': results}
    if digest is not None:
        report['input_digest'] = digest
    return report


def _analyze_player(game, player):
    view = player_view(game, player)
    pure = []
    for i in range(view.n):
        dominators = pure_dominators(game, player, i)
        if dominators:
            pure.append({'action': game.actions(player)[i], 'dominators': _names(game, player, dominators)})
    mixed = dominated_actions(game, player)
    return {
        'player': player,
        'pure': pure,
        'mixed': [encode_certificate(game, player, c) for c in mixed],
        'reduced': [encode_certificate(game, player, reduce_support(game, player, c)) for c in mixed],
    }


def cmd_analyze(args):
    game, digest = _load_game(args.game)
    report = equivalence_report(game)
    entries = [{
        'player': e.player,
        'action': game.actions(e.player)[e.action],
        'round': e.round,
        'nbr': encode_nbr(game, e.player, e.nbr),
        'constructive': encode_certificate(game, e.player, e.constructive),
        'reduced': encode_certificate(game, e.player, e.reduced),
        'subcover': encode_certificate(game, e.player, e.subcover),
    } for e in report.entries]
    results = {
        'dominance': [_analyze_player(game, player) for player in (1, 2)],
        'iesds': _encode_trace(game, report.iesds),
        'rationalizability': _encode_rationalizability(game, report.rationalizability),
        'equivalence': {'equal': True, 'entries': entries},
    }
    return _report('analyze', digest, results), EXIT_OK


def cmd_iesds(args):
    game, digest = _load_game(args.game)
    return _report('iesds', digest, _encode_trace(game, iesds(game))), EXIT_OK


def cmd_rationalize(args):
    game, digest = _load_game(args.game)
    players = []
    for player in (1, 2):
        actions = []
        for i in range(len(game.actions(player))):
            result = best_response_belief(game, player, i)
            if isinstance(result, BestResponseWitness):
                actions.append(encode_witness(game, player, result))
            else:
                actions.append(encode_nbr(game, player, result))
        players.append({'player': player, 'actions': actions})
    results = {'players': players, 'iterated': _encode_rationalizability(game, iterated_rationalizability(game))}
    return _report('rationalize', digest, results), EXIT_OK


def cmd_dominate(args):
    game, digest = _load_game(args.game)
    i = game.action_index(args.player, args.action)
    # A lone action has nothing to be dominated by.
    cert = find_dominating_mixture(game, args.player, i) if len(game.actions(args.player)) > 1 else None
    results = {'player': args.player, 'action': args.action,
               'pure_dominators': _names(game, args.player, pure_dominators(game, args.player, i))}
    if cert is None:
        logger.info('%s is not strictly dominated', args.action)
        results['dominated'] = False
        return _report('dominate', digest, results, status='not-dominated'), EXIT_ABSENT
    results['dominated'] = True
    results['certificate'] = encode_certificate(game, args.player, cert)
    results['reduced'] = encode_certificate(game, args.player, reduce_support(game, args.player, cert))
    return _report('dominate', digest, results), EXIT_OK


def _halfspace(entry, dim):
    if not isinstance(entry, list) or len(entry) != dim + 1:
        raise error.DimensionMismatch('Expected [normal..., offset] with {} normal entries, got {!r}'.format(dim, entry))
    return OpenHalfSpace(entry[:-1], to_rational(entry[-1]))


def parse_cover(text):
    """Parse cover JSON into (Polytope, [OpenHalfSpace]).

    {"dim": d, "polytope": [[normal..., offset]...], "halfspaces": [[normal..., offset]...]}
    where a polytope row means normal . x <= offset and a half-space row
    normal . x < offset.
    """
    try:
        data = json_utils.loads(text)
    except (ValueError, UnicodeDecodeError) as e:
        raise error.Error('Malformed cover JSON: {}'.format(e))
    if not isinstance(data, dict) or sorted(data) != ['dim', 'halfspaces', 'polytope']:
        raise error.Error('Cover JSON needs exactly the keys dim, polytope and halfspaces')
    dim = data['dim']
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise error.DimensionMismatch('dim must be a positive integer, not {!r}'.format(dim))
    for key in ('polytope', 'halfspaces'):
        if not isinstance(data[key], list):
            raise error.Error('{} must be a list of rows, not {!r}'.format(key, data[key]))
    rows = []
    for entry in data['polytope']:
        if not isinstance(entry, list) or len(entry) != dim + 1:
            raise error.DimensionMismatch('Polytope row {!r} does not have {} entries'.format(entry, dim + 1))
        rows.append((to_point(entry[:-1]), to_rational(entry[-1])))
    return Polytope(rows, dim), [_halfspace(entry, dim) for entry in data['halfspaces']]


def cmd_subcover(args):
    data = _read(args.cover)
    polytope, halfspaces = parse_cover(data)
    digest = hashlib.sha256(data).hexdigest()
    try:
        kept = minimal_subcover(halfspaces, polytope)
    except error.NotCovered as e:
        results = {'covered': False, 'witness': [format_rational(x) for x in e.witness]}
        return _report('subcover', digest, results, status='not-covered'), EXIT_ABSENT
    results = {
        'covered': True,
        'subcover': kept,
        'halfspaces': [[format_rational(a) for a in halfspaces[k].normal] + [format_rational(halfspaces[k].offset)]
                       for k in kept],
    }
    return _report('subcover', digest, results), EXIT_OK


def cmd_generate(args):
    if args.tight is not None:
        spec = GeneratorSpec(TIGHT, *args.tight)
    elif args.random is not None:
        spec = GeneratorSpec(RANDOM, args.random[0], args.random[1], args.seed, lo=args.range[0], hi=args.range[1])
    else:
        spec = GeneratorSpec(FIXTURE, fixture=args.fixture)
    return serialize_game(generate(spec)).decode('utf-8'), EXIT_OK


def cmd_verify(args):
    game, digest = _load_game(args.game)
    try:
        report = json_utils.loads(_read(args.report))
    except (ValueError, UnicodeDecodeError) as e:
        raise error.InvalidCertificate('Malformed report JSON: {}'.format(e))
    if not isinstance(report, dict) or report.get('input_digest') != digest:
        raise error.InvalidCertificate('Report was not produced from this game (input digest differs)')
    checked, failures = verify_report(game, report)
    for failure in failures:
        logger.error('%s does not verify', failure)
    results = {'checked': checked, 'failed': failures}
    if failures:
        return _report('verify', digest, results, status='failed'), EXIT_ABSENT
    return _report('verify', digest, results), EXIT_OK


def cmd_plot_data(args):
    game, _ = _load_game(args.game)
    view = player_view(game, args.player)
    if view.m != 2:
        raise error.InvalidGame('plot-data needs an opponent with exactly 2 actions, not {}'.format(view.m))
    out = io.StringIO()
    writer = csv.writer(out, lineterminator='\n')
    for i, name in enumerate(view.row_actions):
        at_first, at_second = payoff_vector(view, 1, i)
        # E_i(q) = slope * q + intercept, q the probability of the first opponent action.
        writer.writerow([name, format_rational(at_first - at_second), format_rational(at_second)])
    return out.getvalue(), EXIT_OK


# Argument parsing
# ----------------------------------------

def _player(value):
    if value not in ('1', '2'):
        raise argparse.ArgumentTypeError('player must be 1 or 2, not {!r}'.format(value))
    return int(value)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log INFO lines to stderr; repeat for DEBUG')
    common.add_argument('-o', '--output', metavar='PATH',
                        help='write the result to PATH (atomically) instead of stdout')
    common.add_argument('--timings', action='store_true',
                        help='add wall-clock timings to JSON reports (output is then no longer reproducible)')

    parser = argparse.ArgumentParser(prog='strictdom',
                                     description='Exact strict dominance and rationalizability for two-player games.')
    subparsers = parser.add_subparsers(dest='command', metavar='<command>')
    subparsers.required = True

    p = subparsers.add_parser('analyze', parents=[common], help='full report: dominance, IESDS, rationalizability')
    p.add_argument('game', help='Game JSON file')
    p.set_defaults(func=cmd_analyze)

    p = subparsers.add_parser('iesds', parents=[common], help='iterated elimination trace')
    p.add_argument('game', help='Game JSON file')
    p.set_defaults(func=cmd_iesds)

    p = subparsers.add_parser('rationalize', parents=[common],
                              help='best-response witnesses and never-best-response certificates')
    p.add_argument('game', help='Game JSON file')
    p.set_defaults(func=cmd_rationalize)

    p = subparsers.add_parser('dominate', parents=[common], help='decide whether one action is strictly dominated')
    p.add_argument('game', help='Game JSON file')
    p.add_argument('--player', type=_player, required=True, help='1 (rows) or 2 (columns)')
    p.add_argument('--action', required=True, help='action name')
    p.set_defaults(func=cmd_dominate)

    p = subparsers.add_parser('subcover', parents=[common], help='minimal subcover of a half-space covering')
    p.add_argument('cover', help='cover JSON file')
    p.set_defaults(func=cmd_subcover)

    p = subparsers.add_parser('generate', parents=[common], help='emit Game JSON')
    kind = p.add_mutually_exclusive_group(required=True)
    kind.add_argument('--tight', nargs=2, type=int, metavar=('N', 'M'), help='tight support-bound instance')
    kind.add_argument('--random', nargs=2, type=int, metavar=('N', 'M'), help='seeded random game')
    kind.add_argument('--fixture', metavar='NAME', help='registered example game')
    p.add_argument('--seed', type=int, default=0, help='seed for --random (default: %(default)s)')
    p.add_argument('--range', nargs=2, type=int, default=[-9, 9], metavar=('LO', 'HI'),
                   help='payoff range for --random (default: -9 9)')
    p.set_defaults(func=cmd_generate)

    p = subparsers.add_parser('verify', parents=[common], help='re-verify every certificate in a report')
    p.add_argument('report', help='report JSON file')
    p.add_argument('game', help='Game JSON file the report was produced from')
    p.set_defaults(func=cmd_verify)

    p = subparsers.add_parser('plot-data', parents=[common], help='payoff lines as CSV (opponent with 2 actions)')
    p.add_argument('game', help='Game JSON file')
    p.add_argument('--player', type=_player, default=1, help='1 (rows) or 2 (columns)')
    p.set_defaults(func=cmd_plot_data)
    return parser


def _emit(text, path):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with atomic_write(path) as f:
            f.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    logger.set_level(logger.level_from_verbosity(args.verbose))
    logger.info('strictdom %s', args.command)
    start = time.perf_counter_ns()
    try:
        result, code = args.func(args)
    except error.InternalConsistencyError as e:
        logger.error('internal consistency check failed: %s', e)
        return EXIT_INTERNAL
    except error.Error as e:
        logger.error('%s', e)
        return EXIT_INPUT
    if isinstance(result, dict):
        if args.timings:
            result['timings'] = {'seconds': format_rational(Fraction(time.perf_counter_ns() - start, 10 ** 9))}
        result = json_utils.dumps(result)
    try:
        _emit(result, args.output)
    except (IOError, OSError) as e:
        logger.error('cannot write %s: %s', args.output, e)
        return EXIT_INPUT
    return code


if __name__ == '__main__':
    sys.exit(main())
