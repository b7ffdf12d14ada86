from collections import namedtuple

from strictdom import error
from strictdom.instances import random_games
from strictdom.instances.registration import make
from strictdom.instances.tight import tight_instance

TIGHT = 'tight'
RANDOM = 'random'
FIXTURE = 'fixture'

GeneratorSpec = namedtuple('GeneratorSpec', ['kind', 'n', 'm', 'seed', 'fixture', 'lo', 'hi'],
                           defaults=(None, None, 0, None) + random_games.DEFAULT_RANGE)


def generate(spec):
    """Build the Game a GeneratorSpec describes."""
    if spec.kind == TIGHT:
        return tight_instance(spec.n, spec.m)[0]
    if spec.kind == RANDOM:
        return random_games.random_game(spec.n, spec.m, spec.seed, spec.lo, spec.hi)
    if spec.kind == FIXTURE:
        if spec.fixture is None:
            raise error.UnregisteredFixture('A fixture spec needs a fixture name')
        return make(spec.fixture)
    raise error.Error('Unknown generator kind {!r}; use tight, random or fixture'.format(spec.kind))
