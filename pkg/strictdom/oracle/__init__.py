from strictdom.oracle.oracle import (DEFAULT_MAX_ACTIONS, DEFAULT_RESOLUTION, SAMPLE_RESOLUTION, GridCheck, GridSpec,
                                    enumerate_min_support, grid_best_responses, grid_check_nbr,
                                    verify_dominance_exhaustive)

__all__ = ["GridSpec", "GridCheck", "DEFAULT_MAX_ACTIONS", "DEFAULT_RESOLUTION", "SAMPLE_RESOLUTION",
           "enumerate_min_support", "grid_best_responses", "grid_check_nbr", "verify_dominance_exhaustive"]
