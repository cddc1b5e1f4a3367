"""Radial constant scalar curvature metrics on S^m x M.

Thin wrapper over the compiled core; results are plain dicts with the same
schema as the JSON written by the ``ryamabe`` command-line tool.
"""

from ._core import (
    NoConvergence,
    NumericalFailure,
    band_index,
    count_extrema_linear,
    derive_constants,
    find_monotone,
    geometry,
    miss,
    numerical_mode,
    polynomial_mode,
    predicted_minimum,
    product_config,
    run_census,
    run_census_problem,
    s2xs2_table,
    s2xs2_threshold,
    sturm_certify,
    sweep_lambda,
    unit_sphere_volume,
)

__all__ = [
    "NoConvergence",
    "NumericalFailure",
    "band_index",
    "count_extrema_linear",
    "derive_constants",
    "find_monotone",
    "geometry",
    "miss",
    "numerical_mode",
    "polynomial_mode",
    "predicted_minimum",
    "product_config",
    "run_census",
    "run_census_problem",
    "s2xs2_table",
    "s2xs2_threshold",
    "sturm_certify",
    "sweep_lambda",
    "unit_sphere_volume",
]

__version__ = "0.1.0"
