"""k-means clustering: weighted k-means++ seeding followed by Lloyd iterations.

Distances for all points to all centroids are computed in one blocked
matrix product per iteration instead of a pass per centroid.
"""

import warnings

import numpy as np

from ..base import BaseEstimator, check_array, check_sample_weight
from ..exceptions import DuplicateCollapse, KTooLarge, UnsupportedParam


def _sq_dist_matrix(X, centers, x_sq=None):
    if x_sq is None:
        x_sq = np.einsum("ij,ij->i", X, X)
    c_sq = np.einsum("ij,ij->i", centers, centers)
    D = x_sq[:, None] + c_sq[None, :] - 2.0 * (X @ centers.T)
    np.maximum(D, 0.0, out=D)
    return D


def _assign(X, centers, x_sq=None):
    """Nearest centroid per row (ties to the lower index) and its squared distance."""
    D = _sq_dist_matrix(X, centers, x_sq)
    labels = np.argmin(D, axis=1)
    return labels, D[np.arange(len(X)), labels]


def kmeans_plusplus(X, k, w, rng, x_sq=None):
    """Weighted k-means++ seeding: each new center is drawn with probability
    proportional to ``w_i * D(x_i)^2``."""
    n = X.shape[0]
    cum = np.cumsum(w)
    first = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
    centers = [X[min(first, n - 1)]]
    closest = _sq_dist_matrix(X, np.asarray(centers), x_sq)[:, 0]
    for _ in range(1, k):
        p = w * closest
        cum = np.cumsum(p)
        if cum[-1] <= 0:
            break
        pick = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
        pick = min(pick, n - 1)
        centers.append(X[pick])
        closest = np.minimum(closest, _sq_dist_matrix(X, X[pick:pick + 1], x_sq)[:, 0])
    return np.array(centers)


def _weighted_means(X, labels, w, k):
    sums = np.zeros((k, X.shape[1]))
    np.add.at(sums, labels, w[:, None] * X)
    mass = np.bincount(labels, weights=w, minlength=k)
    return sums, mass


def lloyd(X, centers, w, max_iter=300, tol=1e-4, debug=False, x_sq=None):
    """Run Lloyd iterations from ``centers``.

    Stops when the assignment no longer changes, when the relative inertia
    change falls to ``tol``, or after ``max_iter`` steps. On a ``tol`` stop
    the centroids are recomputed from the final labels, so each returned
    centroid is the weighted mean of its members; a point may then sit
    marginally closer to another centroid than to its own.
    An empty cluster is moved onto the point farthest from its current
    centroid.

    Returns ``(centers, labels, inertia, n_iter, history)``.
    """
    k = centers.shape[0]
    centers = centers.copy()
    labels, d2 = _assign(X, centers, x_sq)
    inertia = float(w @ d2)
    history = [inertia]
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        sums, mass = _weighted_means(X, labels, w, k)
        nonempty = mass > 0
        centers[nonempty] = sums[nonempty] / mass[nonempty, None]
        empty = np.flatnonzero(~nonempty)
        if empty.size:
            # repair: move each empty centroid onto the currently worst-served point
            cur = np.einsum("ij,ij->i", X - centers[labels], X - centers[labels])
            far = np.argsort(-(w * cur), kind="stable")
            taken = set()
            for c, i in zip(empty, (i for i in far if i not in taken)):
                centers[c] = X[i]
                taken.add(i)
        new_labels, d2 = _assign(X, centers, x_sq)
        new_inertia = float(w @ d2)
        if debug:
            assert new_inertia <= inertia * (1 + 1e-12) + 1e-12, (
                f"inertia increased at iteration {n_iter}: {inertia} -> {new_inertia}"
            )
        history.append(new_inertia)
        stable = np.array_equal(new_labels, labels) and not empty.size
        rel_change = abs(inertia - new_inertia) / inertia if inertia > 0 else 0.0
        labels, inertia = new_labels, new_inertia
        if stable:
            break
        if rel_change <= tol:
            # close the step so centroids are the means of the returned labels
            sums, mass = _weighted_means(X, labels, w, k)
            if (mass > 0).all():
                centers = sums / mass[:, None]
                d2 = np.einsum("ij,ij->i", X - centers[labels], X - centers[labels])
                inertia = float(w @ d2)
                history.append(inertia)
                break
    return centers, labels, inertia, n_iter, history


class KMeans(BaseEstimator):
    """k-means clustering.

    Parameters
    ----------
    n_clusters : int, default=8
    n_init : int, default=10
        Independent seeded restarts; the run with the lowest inertia wins.
    max_iter : int, default=300
    tol : float, default=1e-4
        Relative inertia change treated as converged.
    seed : int or None, default=0
    debug : bool, default=False
        Assert that inertia never increases between Lloyd steps.

    Attributes
    ----------
    cluster_centers_ : ndarray of shape (n_clusters, n_features)
    labels_ : ndarray of shape (n_samples,)
    inertia_ : float
        Weighted sum of squared distances to the assigned centroid.
    n_iter_ : int
    run_inertias_ : ndarray of shape (n_init,)
    """

    _estimator_type = "clusterer"

    def __init__(self, n_clusters=8, n_init=10, max_iter=300, tol=1e-4, seed=0, debug=False):
        self.n_clusters = n_clusters
        self.n_init = n_init
        self.max_iter = max_iter
        self.tol = tol
        self.seed = seed
        self.debug = debug

    def fit(self, X, y=None, sample_weight=None):
        X = check_array(X)
        w = check_sample_weight(sample_weight, X.shape[0])
        k = int(self.n_clusters)
        if k < 1:
            raise UnsupportedParam(f"n_clusters must be >= 1, got {k}")
        if k > X.shape[0]:
            raise KTooLarge(f"n_clusters={k} exceeds {X.shape[0]} samples")
        if self.n_init < 1:
            raise UnsupportedParam(f"n_init must be >= 1, got {self.n_init}")

        distinct = np.unique(X[w > 0], axis=0)
        if len(distinct) < k:
            warnings.warn(
                f"only {len(distinct)} distinct points for {k} clusters; "
                "returning the distinct points as centroids",
                DuplicateCollapse,
                stacklevel=2,
            )
            centers = distinct
            labels, d2 = _assign(X, centers)
            self._set(X, centers, labels, float(w @ d2), 0, np.array([float(w @ d2)]))
            return self._freeze()

        rng = np.random.default_rng(self.seed)
        x_sq = np.einsum("ij,ij->i", X, X)
        best = None
        inertias = []
        for _ in range(self.n_init):
            init = kmeans_plusplus(X, k, w, rng, x_sq)
            centers, labels, inertia, n_iter, _ = lloyd(
                X, init, w, self.max_iter, self.tol, self.debug, x_sq
            )
            inertias.append(inertia)
            if best is None or inertia < best[2]:
                best = (centers, labels, inertia, n_iter)
        self._set(X, *best, np.asarray(inertias))
        return self._freeze()

    def _set(self, X, centers, labels, inertia, n_iter, inertias):
        self._check_n_features(X, reset=True)
        self.cluster_centers_ = centers
        self.labels_ = labels
        self.inertia_ = inertia
        self.n_iter_ = n_iter
        self.run_inertias_ = inertias

    def predict(self, X):
        """Index of the nearest centroid (ties to the lower index)."""
        X = self._validate_for_predict(X)
        return _assign(X, self.cluster_centers_)[0]

    def transform(self, X):
        """Euclidean distance to every centroid."""
        X = self._validate_for_predict(X)
        return np.sqrt(_sq_dist_matrix(X, self.cluster_centers_))

    def fit_predict(self, X, y=None, sample_weight=None):
        return self.fit(X, sample_weight=sample_weight).labels_

    def score(self, X, y=None):
        """Negated inertia of ``X`` under the fitted centroids."""
        X = self._validate_for_predict(X)
        return -float(_assign(X, self.cluster_centers_)[1].sum())
