"""deskml: a compact machine-learning toolkit with a uniform estimator interface.

Estimators implement ``fit`` and, depending on what they do, ``predict``,
``transform`` and ``score``. Cross-validation, grid search and pipelines are
estimators themselves and compose freely.
"""

from .base import BaseEstimator, clone
from .cluster import KMeans
from .decomposition import PCA
from .estimators import EstimatorSpec, fit, predict, score, transform
from .linear_model import ElasticNet, Lasso, LassoCV, LassoLars
from .model_selection import GridSearchCV
from .neighbors import KNeighborsClassifier
from .pipeline import Identity, Pipeline, make_pipeline
from .svm import SVC

__version__ = "0.1.0"

__all__ = [
    "BaseEstimator",
    "ElasticNet",
    "EstimatorSpec",
    "GridSearchCV",
    "Identity",
    "KMeans",
    "KNeighborsClassifier",
    "Lasso",
    "LassoCV",
    "LassoLars",
    "PCA",
    "Pipeline",
    "SVC",
    "clone",
    "fit",
    "make_pipeline",
    "predict",
    "score",
    "transform",
]
