"""Cross-validation, grid search and related model-selection tools."""

from ._search import GridSearchCV, ParamGrid
from ._split import SplitPlan, check_cv, kfold, leave_one_out, stratified_kfold
from ._validation import cross_val_score, effective_n_jobs, fit_and_score, parallel_map

__all__ = [
    "GridSearchCV",
    "ParamGrid",
    "SplitPlan",
    "check_cv",
    "cross_val_score",
    "effective_n_jobs",
    "fit_and_score",
    "kfold",
    "leave_one_out",
    "parallel_map",
    "stratified_kfold",
]
