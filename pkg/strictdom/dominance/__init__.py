from strictdom.dominance.dominance import (DominanceCertificate, dominated_actions, find_dominating_mixture,
                                           fold_out, make_certificate, mixed_dominates, player_view,
                                           pure_dominates, pure_dominators, reduce_support,
                                           verify_certificate)
from strictdom.dominance.elimination import EliminationRound, EliminationTrace, iesds, random_elimination

__all__ = ["DominanceCertificate", "make_certificate", "pure_dominates", "pure_dominators",
           "mixed_dominates", "find_dominating_mixture", "verify_certificate", "dominated_actions",
           "reduce_support", "fold_out", "player_view", "EliminationRound", "EliminationTrace", "iesds",
           "random_elimination"]
