"""Cross-validated Lasso exploiting warm starts along the penalty grid."""

import numpy as np

from ..base import check_X_y, reject_sample_weight
from ..exceptions import UnsupportedParam
from ..metrics import r2_score
from ..model_selection._split import check_cv
from ._coordinate_descent import LinearModel, _preprocess, _solve


def alpha_grid(X, y, n_alphas=100, eps=1e-3, fit_intercept=True):
    """Geometric grid from the smallest all-zero penalty down to ``eps`` times it."""
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if fit_intercept:
        X = X - X.mean(axis=0)
        y = y - y.mean()
    alpha_max = float(np.max(np.abs(X.T @ y))) / X.shape[0]
    if alpha_max == 0.0:
        return np.array([0.0])
    return np.geomspace(alpha_max, alpha_max * eps, n_alphas)


def _normalize_grid(alphas):
    alphas = np.unique(np.asarray(alphas, dtype=np.float64).ravel())[::-1]
    if alphas.size == 0 or (alphas < 0).any():
        raise UnsupportedParam("the alpha grid must be a non-empty set of nonnegative values")
    return alphas


def enet_path(X, y, alphas, l1_ratio=1.0, fit_intercept=True, max_iter=1000, tol=1e-4, warm_start=True):
    """Solve for every penalty in ``alphas`` (decreasing), optionally warm-starting.

    Returns a list of :class:`LinearFit`, one per penalty.
    """
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w = np.ones(X.shape[0])
    Xs, ys, X_offset, y_offset = _preprocess(X, y, w, fit_intercept)
    fits = []
    coef = None
    for alpha in alphas:
        fit = _solve(Xs, ys, X_offset, y_offset, float(alpha), l1_ratio, max_iter, tol,
                     coef if warm_start else None, True)
        coef = fit.coef
        fits.append(fit)
    return fits


def lasso_cv(X, y, alphas="auto", cv=5, n_alphas=100, eps=1e-3, fit_intercept=True,
             max_iter=1000, tol=1e-4):
    """Pick the Lasso penalty maximizing mean held-out R^2.

    Each fold solves the whole grid from the largest penalty down, starting
    every solve from the previous penalty's weights.

    Returns
    -------
    best_alpha : float
    model : LinearFit
        Refit on all rows at ``best_alpha``.
    cv_curve : ndarray of shape (n_alphas,)
        Mean held-out R^2 per penalty, aligned with the normalized grid.
    alphas : ndarray
        The normalized (strictly decreasing) grid.
    """
    X, y = check_X_y(X, y, y_numeric=True)
    if isinstance(alphas, str):
        if alphas != "auto":
            raise UnsupportedParam(f"alphas must be 'auto' or a sequence, got {alphas!r}")
        alphas = alpha_grid(X, y, n_alphas, eps, fit_intercept)
    alphas = _normalize_grid(alphas)
    plan = check_cv(cv, y, classifier=False)

    scores = np.empty((len(plan), len(alphas)))
    for f, (train, test) in enumerate(plan):
        fits = enet_path(X[train], y[train], alphas, 1.0, fit_intercept, max_iter, tol)
        for a, fit in enumerate(fits):
            scores[f, a] = r2_score(y[test], X[test] @ fit.coef + fit.intercept)
    cv_curve = scores.mean(axis=0)
    best = int(np.argmax(cv_curve))
    best_alpha = float(alphas[best])
    model = enet_path(X, y, [best_alpha], 1.0, fit_intercept, max_iter, tol)[0]
    return best_alpha, model, cv_curve, alphas


class LassoCV(LinearModel):
    """Lasso whose penalty is chosen by cross-validation along a warm-started path.

    Parameters
    ----------
    alphas : "auto" or sequence of float, default="auto"
    n_alphas : int, default=100
        Grid length when ``alphas="auto"``.
    eps : float, default=1e-3
        Ratio of the smallest to the largest automatic penalty.
    cv : int or SplitPlan, default=5
    fit_intercept : bool, default=True
    max_iter : int, default=1000
    tol : float, default=1e-4
    """

    def __init__(self, alphas="auto", n_alphas=100, eps=1e-3, cv=5, fit_intercept=True,
                 max_iter=1000, tol=1e-4):
        self.alphas = alphas
        self.n_alphas = n_alphas
        self.eps = eps
        self.cv = cv
        self.fit_intercept = fit_intercept
        self.max_iter = max_iter
        self.tol = tol

    def fit(self, X, y, sample_weight=None):
        reject_sample_weight(self, sample_weight)
        X, y = check_X_y(X, y, y_numeric=True)
        best, model, curve, alphas = lasso_cv(
            X, y, self.alphas, self.cv, self.n_alphas, self.eps, self.fit_intercept,
            self.max_iter, self.tol,
        )
        self._check_n_features(X, reset=True)
        self.alpha_ = best
        self.alphas_ = alphas
        self.cv_curve_ = curve
        self.coef_ = model.coef
        self.intercept_ = model.intercept
        self.dual_gap_ = model.dual_gap
        return self._freeze()
