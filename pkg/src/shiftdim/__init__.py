"""Shift-dimension of multiparameter persistence modules.

Exact linear-time shift-dimension for bivariate interval modules, a
brute-force grid oracle over a prime field for general finitely presented
two-parameter modules, stable-rank step-function curves, non-additivity
diagnostics, and a parameterized family of multipersistence contours.
"""

from .algorithm import (
    ShiftDimResult,
    critical_taus,
    shift_dimension_2d,
    stable_rank_curve,
    subset_oracle,
)
from .contours import (
    AxiomReport,
    ComponentwiseShiftContour,
    ContourResult,
    CurveContour,
    DistanceTypeContour,
    MultivariateShiftContour,
    StandardContour,
    TruncatedContour,
    check_contour_axioms,
    const_density,
    exp_decay_density,
    gauss_density,
)
from .degrees import INFINITY, Degree, meet, join, parse_degree
from .errors import ComputationRefused, InternalInvariantError
from .grid import (
    GridModule,
    HomogeneousElement,
    beta0_grid,
    bruteforce_v_basis,
    direct_sum_grids,
    generators_grid,
    grid_from_intervals,
    is_v_annihilating,
    scale_grid,
    shift_dimension_bruteforce,
    stable_rank_curve_grid,
    submodule_closure,
)
from .intervals import (
    DirectSumModule,
    IntervalModule,
    MalformedModule,
    Staircase,
    beta0,
    quotient_by_generator,
    shift_is_nonzero,
    support_contains,
    truncate,
)
from .report import combined_oracle_grid, locus_report, summand_curve
from .stepfun import (
    StepFunction,
    err_vp,
    interleaving_distance,
    locus_nonadditivity,
    lp_distance,
    stabilize,
    sum_curves,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITY",
    "AxiomReport",
    "ComponentwiseShiftContour",
    "ComputationRefused",
    "ContourResult",
    "CurveContour",
    "Degree",
    "DirectSumModule",
    "DistanceTypeContour",
    "GridModule",
    "HomogeneousElement",
    "IntervalModule",
    "InternalInvariantError",
    "MalformedModule",
    "MultivariateShiftContour",
    "ShiftDimResult",
    "Staircase",
    "StandardContour",
    "StepFunction",
    "TruncatedContour",
    "beta0",
    "beta0_grid",
    "bruteforce_v_basis",
    "check_contour_axioms",
    "combined_oracle_grid",
    "const_density",
    "critical_taus",
    "direct_sum_grids",
    "err_vp",
    "exp_decay_density",
    "gauss_density",
    "generators_grid",
    "grid_from_intervals",
    "interleaving_distance",
    "is_v_annihilating",
    "join",
    "locus_nonadditivity",
    "locus_report",
    "lp_distance",
    "meet",
    "parse_degree",
    "quotient_by_generator",
    "scale_grid",
    "shift_dimension_2d",
    "shift_dimension_bruteforce",
    "shift_is_nonzero",
    "stabilize",
    "stable_rank_curve",
    "stable_rank_curve_grid",
    "subset_oracle",
    "submodule_closure",
    "sum_curves",
    "summand_curve",
    "support_contains",
    "truncate",
]
