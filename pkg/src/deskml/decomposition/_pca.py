"""Principal component analysis with a randomized range finder."""

import numpy as np

from ..base import BaseEstimator, TransformerMixin, check_array, reject_sample_weight
from ..exceptions import UnsupportedParam


def randomized_range_finder(A, size, n_power_iters, rng):
    """Orthonormal basis (n_rows x size) approximating the range of ``A``.

    A Gaussian test matrix is pushed through ``A`` and then through
    ``n_power_iters`` rounds of ``A A^T``, re-orthonormalizing after every
    product so small singular directions are not lost to rounding.
    """
    omega = rng.standard_normal((A.shape[1], size))
    Q, _ = np.linalg.qr(A @ omega)
    for _ in range(n_power_iters):
        Z, _ = np.linalg.qr(A.T @ Q)
        Q, _ = np.linalg.qr(A @ Z)
    return Q


def randomized_svd(A, k, n_oversamples=10, n_power_iters=4, seed=None):
    """Truncated SVD ``A ~ U diag(s) Vt`` of rank ``k`` from random projections."""
    rng = np.random.default_rng(seed)
    size = min(k + n_oversamples, min(A.shape))
    Q = randomized_range_finder(A, size, n_power_iters, rng)
    B = Q.T @ A
    Ub, s, Vt = np.linalg.svd(B, full_matrices=False)
    return (Q @ Ub)[:, :k], s[:k], Vt[:k]


def _flip_signs(components):
    """Make the largest-magnitude entry of each row positive."""
    pivots = np.argmax(np.abs(components), axis=1)
    signs = np.sign(components[np.arange(len(components)), pivots])
    signs[signs == 0] = 1.0
    return components * signs[:, None]


class PCA(BaseEstimator, TransformerMixin):
    """Truncated PCA.

    Parameters
    ----------
    n_components : int, default=2
    solver : {"auto", "exact", "randomized"}, default="auto"
        ``auto`` uses the exact thin SVD when ``min(n, p) <= 100`` or
        ``n_components > min(n, p) / 5``, and the randomized solver otherwise.
    n_oversamples : int, default=10
        Extra random directions beyond ``n_components``.
    n_power_iters : int, default=4
    seed : int or None, default=0

    Attributes
    ----------
    components_ : ndarray of shape (n_components, n_features)
        Orthonormal rows; the largest-magnitude entry of each is positive.
    explained_variance_ : ndarray of shape (n_components,)
        Variance (ddof=1) of the training data along each component,
        non-increasing.
    mean_ : ndarray of shape (n_features,)
    solver_ : str
        Solver actually used.
    """

    def __init__(self, n_components=2, solver="auto", n_oversamples=10, n_power_iters=4, seed=0):
        self.n_components = n_components
        self.solver = solver
        self.n_oversamples = n_oversamples
        self.n_power_iters = n_power_iters
        self.seed = seed

    def fit(self, X, y=None, sample_weight=None):
        reject_sample_weight(self, sample_weight)
        X = check_array(X)
        n, p = X.shape
        k = self.n_components
        if not 1 <= k <= min(n, p):
            raise UnsupportedParam(f"n_components must lie in [1, {min(n, p)}], got {k}")
        solver = self.solver
        if solver == "auto":
            m = min(n, p)
            solver = "exact" if m <= 100 or k > m / 5 else "randomized"
        if solver not in ("exact", "randomized"):
            raise UnsupportedParam(f"unknown solver {self.solver!r}")

        self.mean_ = X.mean(axis=0)
        Xc = X - self.mean_
        if solver == "exact":
            _, _, Vt = np.linalg.svd(Xc, full_matrices=False)
            components = Vt[:k]
        else:
            _, _, components = randomized_svd(
                Xc, k, self.n_oversamples, self.n_power_iters, self.seed
            )
        components = _flip_signs(components)
        # variance actually captured along each direction, so transform()
        # output columns reproduce explained_variance_ exactly
        ddof = 1 if n > 1 else 0
        var = np.sum((Xc @ components.T) ** 2, axis=0) / (n - ddof)
        order = np.argsort(-var, kind="stable")
        self.components_ = np.ascontiguousarray(components[order])
        self.explained_variance_ = var[order]
        total = np.sum(Xc**2) / (n - ddof)
        self.explained_variance_ratio_ = self.explained_variance_ / total if total > 0 \
            else np.zeros(k)
        self.solver_ = solver
        self._check_n_features(X, reset=True)
        return self._freeze()

    def transform(self, X):
        X = self._validate_for_predict(X)
        return (X - self.mean_) @ self.components_.T

    def inverse_transform(self, Z):
        Z = np.asarray(Z, dtype=np.float64)
        return Z @ self.components_ + self.mean_
