from strictdom.geometry.caratheodory import caratheodory_conical_bounded, caratheodory_convex
from strictdom.geometry.covering import (Coverage, halfspace_covers, minimal_subcover,
                                         rotation_merge, union_covers)
from strictdom.geometry.linalg import linear_dependence, rank, rref, solve_square
from strictdom.geometry.polytope import OpenHalfSpace, Polytope, polytope_vertices, probability_simplex
from strictdom.geometry.radon import RadonPartition, radon_partition
from strictdom.geometry.vectors import as_point, convex_combination, dominates, dot

__all__ = ["linear_dependence", "radon_partition", "RadonPartition", "caratheodory_convex",
           "caratheodory_conical_bounded", "OpenHalfSpace", "Polytope", "polytope_vertices",
           "probability_simplex", "halfspace_covers", "union_covers", "Coverage",
           "minimal_subcover", "rotation_merge", "convex_combination", "dominates", "dot",
           "as_point", "rank", "rref", "solve_square"]
