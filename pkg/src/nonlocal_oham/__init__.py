"""Optimal homotopy analysis (and its Adomian special case) for nonlocal
elliptic two-point problems, built on an exact Green's-function operator."""

__version__ = "0.1.0"

from .analysis import ConvergenceReport, ResultTable, error_bound, measure_deltas, result_table
from .config import OPTIMIZE, PStrategy, SolverConfig
from .kernel import apply_green, green_eval
from .oham import HomotopySeries, SeriesStage, build_series, partial_sum
from .poly import Polynomial
from .problem import (
    NonpositiveNonlocalCoefficient,
    ProblemSpec,
    alpha,
    builtin,
    exact_eval,
    parse_problem,
    serialize_problem,
)
from .residual import OptimizationInfeasible, ResidualReport, discrete_residual, optimize_c0

__all__ = [
    "ConvergenceReport", "HomotopySeries", "NonpositiveNonlocalCoefficient", "OPTIMIZE",
    "OptimizationInfeasible", "PStrategy", "Polynomial", "ProblemSpec", "ResidualReport",
    "ResultTable", "SeriesStage", "SolverConfig", "alpha", "apply_green", "build_series",
    "builtin", "discrete_residual", "error_bound", "exact_eval", "green_eval",
    "measure_deltas", "optimize_c0", "parse_problem", "partial_sum", "result_table",
    "serialize_problem",
]
