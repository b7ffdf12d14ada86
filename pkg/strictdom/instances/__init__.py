from strictdom.instances.registration import registry, register, make, spec
from strictdom.instances.random_games import random_ensemble, random_game
from strictdom.instances.tight import tight_certificate, tight_instance
from strictdom.instances.generator import FIXTURE, RANDOM, TIGHT, GeneratorSpec, generate

# Worked examples
# ----------------------------------------

register(
    id='fig1',
    entry_point='strictdom.instances.fixtures:fig1',
    description='3x2 game whose action D is dominated only by a mixture',
)

register(
    id='five-lines',
    entry_point='strictdom.instances.fixtures:five_lines',
    description='five payoff lines against a two-action opponent',
)

register(
    id='vec3x2',
    entry_point='strictdom.instances.fixtures:vec3x2',
    description='rows (1,5), (5,1), (2,2)',
)

register(
    id='prisoners-dilemma',
    entry_point='strictdom.instances.fixtures:prisoners_dilemma',
    description='defection strictly dominates cooperation for both players',
)


def example_game(name):
    """One of the worked example games by fixture id."""
    return make(name)
