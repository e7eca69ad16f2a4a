"""Approximate minimum Manhattan networks in normed planes with polygonal unit balls.

The solver builds, for every direction of the ball, a network within 1.25 of the
optimum for that direction; their union is within 2.5 of a minimum network.
"""

from .io import gen_instance, parse_instance, preset_ball
from .network import Network, verify_manhattan
from .norm import Point, UnitBall, distance, norm, validate_ball
from .solver import SolveReport, exact_1dmmn_oracle, lower_bound, ratio_report, solve_bmmn

__version__ = "0.1.0"

__all__ = [
    "Network", "Point", "SolveReport", "UnitBall", "distance", "exact_1dmmn_oracle",
    "gen_instance", "lower_bound", "norm", "parse_instance", "preset_ball", "ratio_report",
    "solve_bmmn", "validate_ball", "verify_manhattan",
]
