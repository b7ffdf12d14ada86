from strictdom import error
from strictdom.version import VERSION as __version__

from strictdom import logger
from strictdom.games import Belief, Game, MixedStrategy, parse_game, serialize_game
from strictdom.instances import make, register, spec
from strictdom.dominance import find_dominating_mixture, iesds, reduce_support
from strictdom.rationalizability import equivalence_report, iterated_rationalizability

__all__ = ["Game", "Belief", "MixedStrategy", "parse_game", "serialize_game", "make", "spec", "register",
           "find_dominating_mixture", "reduce_support", "iesds", "iterated_rationalizability",
           "equivalence_report"]
