"""Framed convex projective structures on the pair of pants.

Eight positive coordinates determine the three boundary holonomies in
SL(3, R); six eigenvalue-ratio invariants cut out two-dimensional
symplectic leaves charted by (sigma1, tau1).  The package computes
holonomies, traces of self-intersecting curves in closed form and by
matrix oracle, Hamiltonian trace flows with period detection, leaf
minima and level sets, and ships numerical verification suites plus a
command line front end.
"""

from .coords import (FGCoords, LeafPoint, LengthVector, casimirs,
                     chart_point, fuchsian_leaf, fuchsian_point, leaf_embed,
                     unipotent_leaf)
from .dual import Dual, gradient2, hessian2, value_of
from .dynamics import (BelowMinimumError, Trajectory, convexity_probe,
                       detect_period, find_minimum, integrate, level_set,
                       level_set_csv, properness_probe, svg_polyline,
                       trajectory_csv)
from .flags import (Flag, ProjLine, ProjPoint, cr1, cr2,
                    cross_ratio_concurrent, standard_quadruple, triple_ratio)
from .holonomy import (Word, eigenvalue_ratio_report, holonomy_word,
                       matrix_E, matrix_T, peripheral_holonomies,
                       predicted_eigenvalue_ratios)
from .poisson import (EPSILON, HAM_E, HAM_I, LogLinearFunction,
                      bracket_coordinates, bracket_log_linear,
                      casimir_log_functions, coordinate_flow, eruption_flow,
                      hamiltonian_vf_leaf, hexagon_flow, mixed_flow,
                      symplectic_form_leaf)
from .proj_linalg import (eigenvalues_real3, mat_inv, mat_mul,
                          projective_distance, projectively_equal)
from .traces import (CurveId, has_closed_form, theta_constant,
                     trace_closed_form, trace_function, trace_matrix_oracle)
from .verify import (run_suite, verify_conjugator_eruption,
                     verify_conjugator_hexagon, verify_fuchsian_ode_display)

__version__ = "1.0.0"

__all__ = [
    "BelowMinimumError", "CurveId", "Dual", "EPSILON", "FGCoords", "Flag",
    "HAM_E", "HAM_I", "LeafPoint", "LengthVector", "LogLinearFunction",
    "ProjLine", "ProjPoint", "Trajectory", "Word", "bracket_coordinates",
    "bracket_log_linear", "casimir_log_functions", "casimirs", "chart_point",
    "convexity_probe", "coordinate_flow", "cr1", "cr2",
    "cross_ratio_concurrent", "detect_period", "eigenvalue_ratio_report",
    "eigenvalues_real3", "eruption_flow", "find_minimum", "fuchsian_leaf",
    "fuchsian_point", "gradient2", "hamiltonian_vf_leaf", "has_closed_form",
    "hessian2", "hexagon_flow", "holonomy_word", "integrate", "leaf_embed",
    "level_set", "level_set_csv", "mat_inv", "mat_mul", "matrix_E",
    "matrix_T", "mixed_flow", "peripheral_holonomies",
    "predicted_eigenvalue_ratios", "projective_distance",
    "projectively_equal", "properness_probe", "run_suite",
    "standard_quadruple", "svg_polyline", "symplectic_form_leaf",
    "theta_constant", "trace_closed_form", "trace_function",
    "trace_matrix_oracle", "trajectory_csv", "triple_ratio",
    "unipotent_leaf", "value_of", "verify_conjugator_eruption",
    "verify_conjugator_hexagon", "verify_fuchsian_ode_display",
]
