from strictdom.rationalizability.best_response import (BestResponseWitness, NbrCertificate,
                                                      RationalizabilityResult, RationalizabilityRound,
                                                      best_response_belief, iterated_rationalizability,
                                                      verify_nbr)
from strictdom.rationalizability.constructive import constructive_mixture_from_nbr, subcover_mixture
from strictdom.rationalizability.report import EquivalenceEntry, EquivalenceReport, equivalence_report

__all__ = ["BestResponseWitness", "NbrCertificate", "RationalizabilityRound", "RationalizabilityResult",
           "best_response_belief", "verify_nbr", "iterated_rationalizability",
           "constructive_mixture_from_nbr", "subcover_mixture", "EquivalenceEntry", "EquivalenceReport",
           "equivalence_report"]
