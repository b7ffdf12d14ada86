from strictdom.lp.program import (EQ, GE, INFEASIBLE, LE, OPTIMAL, UNBOUNDED,
                                  Constraint, LinearProgram, LpOutcome,
                                  constraint)
from strictdom.lp.simplex import lp_feasible_point, lp_maximize

__all__ = ["LinearProgram", "LpOutcome", "Constraint", "constraint", "lp_maximize",
           "lp_feasible_point", "OPTIMAL", "INFEASIBLE", "UNBOUNDED", "LE", "EQ", "GE"]
