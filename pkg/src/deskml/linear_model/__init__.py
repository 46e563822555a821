"""Penalized linear regression."""

from ._coordinate_descent import (
    ElasticNet,
    Lasso,
    LinearFit,
    enet_coordinate_descent,
    enet_dual_gap,
    soft_threshold,
)
from ._cv import LassoCV, alpha_grid, enet_path, lasso_cv
from ._lars import LarsPath, LassoLars, lars_path

__all__ = [
    "ElasticNet",
    "Lasso",
    "LassoCV",
    "LassoLars",
    "LarsPath",
    "LinearFit",
    "alpha_grid",
    "enet_coordinate_descent",
    "enet_dual_gap",
    "enet_path",
    "lars_path",
    "lasso_cv",
    "soft_threshold",
]
