from strictdom.games.codec import game_from_dict, game_to_dict, parse_game, serialize_game
from strictdom.games.game import (PLAYERS, Belief, Game, MixedStrategy, check_player, expected_payoff,
                                  normalize_positive, payoff_vector, transpose)

__all__ = ["Game", "Belief", "MixedStrategy", "PLAYERS", "check_player", "payoff_vector",
           "expected_payoff", "normalize_positive", "transpose", "parse_game", "serialize_game",
           "game_from_dict", "game_to_dict"]
