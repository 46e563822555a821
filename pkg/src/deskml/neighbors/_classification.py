import numpy as np

from ..base import (
    BaseEstimator,
    ClassifierMixin,
    check_X_y,
    encode_labels,
    reject_sample_weight,
)
from ..exceptions import KTooLarge, UnsupportedParam
from ._ball_tree import BallTree, brute_force_knn


def choose_strategy(n_features, dim_threshold=20):
    """Brute force above ``dim_threshold`` features, ball tree otherwise."""
    return "brute" if n_features > dim_threshold else "ball_tree"


class KNeighborsClassifier(BaseEstimator, ClassifierMixin):
    """Majority vote among the k nearest training samples.

    Vote ties go to the class with the smaller summed distance, then to the
    lower class index.

    Parameters
    ----------
    n_neighbors : int, default=5
    algorithm : {"auto", "ball_tree", "brute"}, default="auto"
    leaf_size : int, default=30
    dim_threshold : int, default=20
        ``auto`` switches to brute force when ``n_features > dim_threshold``.
    """

    def __init__(self, n_neighbors=5, algorithm="auto", leaf_size=30, dim_threshold=20):
        self.n_neighbors = n_neighbors
        self.algorithm = algorithm
        self.leaf_size = leaf_size
        self.dim_threshold = dim_threshold

    def fit(self, X, y, sample_weight=None):
        reject_sample_weight(self, sample_weight)
        X, y = check_X_y(X, y)
        if self.algorithm not in ("auto", "ball_tree", "brute"):
            raise UnsupportedParam(f"unknown algorithm {self.algorithm!r}")
        if not 1 <= self.n_neighbors:
            raise UnsupportedParam(f"n_neighbors must be >= 1, got {self.n_neighbors}")
        if self.n_neighbors > X.shape[0]:
            raise KTooLarge(f"n_neighbors={self.n_neighbors} exceeds {X.shape[0]} training samples")
        self.classes_, self._codes = encode_labels(y)
        strategy = self.algorithm
        if strategy == "auto":
            strategy = choose_strategy(X.shape[1], self.dim_threshold)
        self.strategy_ = strategy
        self._X = X
        self.tree_ = BallTree(X, self.leaf_size) if strategy == "ball_tree" else None
        self._check_n_features(X, reset=True)
        return self._freeze()

    def kneighbors(self, X, n_neighbors=None):
        X = self._validate_for_predict(X)
        k = self.n_neighbors if n_neighbors is None else n_neighbors
        if self.tree_ is not None:
            return self.tree_.query(X, k)
        return brute_force_knn(self._X, X, k)

    def predict(self, X):
        dist, ind = self.kneighbors(X)
        n_classes = len(self.classes_)
        labels = self._codes[ind]
        out = np.empty(len(ind), dtype=np.intp)
        for r in range(len(ind)):
            votes = np.bincount(labels[r], minlength=n_classes)
            top = np.flatnonzero(votes == votes.max())
            if len(top) > 1:
                sums = np.array([dist[r][labels[r] == c].sum() for c in top])
                top = top[sums == sums.min()]
            out[r] = top[0]
        return self.classes_[out]
