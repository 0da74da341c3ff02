"""Longest spanning tree with neighborhoods: approximation algorithms A1 and A2,
upper bounds on the optimum, an exhaustive oracle and instance generators."""
from .approx import OmegaInfo, algo_a1, algo_a2, candidate_t1, candidate_t2, omega
from .bounds import BoundsReport, bounds_report, certified_ratio, radius_R
from .geometry import DiameterPair, bichromatic_diameter, dist, monochromatic_diameter
from .instance import Instance, InstanceError, Neighborhood, normalize, read_instance, validate, write_instance
from .oracle import BudgetExceeded, count_selections, exact_opt
from .spanning import Selection, Solution, Tree, max_spanning_tree, star, two_star
from .theory import RHO

__all__ = [
    "BoundsReport", "BudgetExceeded", "DiameterPair", "Instance", "InstanceError",
    "Neighborhood", "OmegaInfo", "RHO", "Selection", "Solution", "Tree",
    "algo_a1", "algo_a2", "bichromatic_diameter", "bounds_report", "candidate_t1",
    "candidate_t2", "certified_ratio", "count_selections", "dist", "exact_opt",
    "max_spanning_tree", "monochromatic_diameter", "normalize", "omega", "radius_R",
    "read_instance", "star", "two_star", "validate", "write_instance",
]
