"""Exact k-nearest neighbors: ball tree with a brute-force path for high dimensions."""

from ._ball_tree import BallTree, brute_force_knn, knn_query, sq_distances
from ._classification import KNeighborsClassifier, choose_strategy

__all__ = [
    "BallTree",
    "KNeighborsClassifier",
    "brute_force_knn",
    "choose_strategy",
    "knn_query",
    "sq_distances",
]
