"""Elastic Net and Lasso by cyclic coordinate descent.

The objective minimized is::

    1 / (2 * sum(w)) * sum_i w_i (y_i - x_i . coef - intercept)^2
        + alpha * l1_ratio * ||coef||_1
        + 0.5 * alpha * (1 - l1_ratio) * ||coef||_2^2

With unit weights the loss normalization is the usual ``1 / (2 n)``.
Convergence is certified by the duality gap, evaluated after every sweep.
"""

from dataclasses import dataclass

import numpy as np

from ..base import (
    BaseEstimator,
    RegressorMixin,
    check_sample_weight,
    check_X_y,
)
from ..exceptions import NotConverged, UnsupportedParam


@dataclass(frozen=True)
class LinearFit:
    """Result of a penalized least-squares solve."""

    coef: np.ndarray
    intercept: float
    dual_gap: float
    n_iter: int


def soft_threshold(x, threshold):
    return np.sign(x) * np.maximum(np.abs(x) - threshold, 0.0)


def _preprocess(X, y, sample_weight, fit_intercept):
    """Center (weighted) and fold the weights into the rows.

    Returns ``Xs, ys, X_offset, y_offset`` such that the loss becomes
    ``0.5 * ||ys - Xs @ coef||^2``.
    """
    v = sample_weight / sample_weight.sum()
    if fit_intercept:
        X_offset = v @ X
        y_offset = float(v @ y)
    else:
        X_offset = np.zeros(X.shape[1])
        y_offset = 0.0
    sv = np.sqrt(v)
    Xs = np.asfortranarray(sv[:, None] * (X - X_offset))
    ys = sv * (y - y_offset)
    return Xs, ys, X_offset, y_offset


def enet_dual_gap(Xs, ys, coef, l1_reg, l2_reg, residual=None):
    """Duality gap of ``0.5||ys - Xs b||^2 + l1_reg||b||_1 + 0.5 l2_reg||b||^2``.

    The ridge term is handled as a Lasso on the augmented design
    ``[Xs; sqrt(l2_reg) I]``; the dual point is the augmented residual
    rescaled into the feasible set ``|Xs_aug^T theta| <= l1_reg``.

    When ``l1_reg == 0`` the feasible set degenerates to ``Xs_aug^T theta = 0``
    and no rescaling can reach it; the unscaled residual is used and the
    absolute value returned, which vanishes exactly at the optimum.
    """
    R = ys - Xs @ coef if residual is None else residual
    XtA = Xs.T @ R - l2_reg * coef
    dual_norm = np.max(np.abs(XtA)) if XtA.size else 0.0
    R_norm2 = float(R @ R)
    w_norm2 = float(coef @ coef)
    if l1_reg > 0 and dual_norm > l1_reg:
        const = l1_reg / dual_norm
    else:
        const = 1.0
    gap = (
        0.5 * (1.0 + const**2) * (R_norm2 + l2_reg * w_norm2)
        + l1_reg * float(np.abs(coef).sum())
        - const * float(R @ ys)
    )
    if l1_reg == 0:
        return abs(gap)
    return max(gap, 0.0)


def enet_coordinate_descent(
    X,
    y,
    alpha=1.0,
    l1_ratio=0.5,
    sample_weight=None,
    fit_intercept=True,
    max_iter=1000,
    tol=1e-4,
    coef_init=None,
    raise_on_fail=True,
):
    """Fit Elastic Net weights by cyclic coordinate descent.

    Parameters
    ----------
    X : ndarray of shape (n_samples, n_features)
    y : ndarray of shape (n_samples,)
    alpha : float
        Overall penalty strength, ``>= 0``.
    l1_ratio : float
        Mix between L1 (1.0, Lasso) and L2 (0.0, ridge) penalties.
    sample_weight : ndarray or None
    fit_intercept : bool
        Center X and y (weighted) before solving.
    max_iter : int
        Maximum number of full sweeps over the coordinates.
    tol : float
        Stop once the duality gap is ``<= tol``.
    coef_init : ndarray or None
        Warm start.
    raise_on_fail : bool
        Raise :class:`NotConverged` when ``max_iter`` is exhausted.

    Returns
    -------
    LinearFit
    """
    if alpha < 0:
        raise UnsupportedParam(f"alpha must be >= 0, got {alpha}")
    if not 0.0 <= l1_ratio <= 1.0:
        raise UnsupportedParam(f"l1_ratio must lie in [0, 1], got {l1_ratio}")
    if tol <= 0:
        raise UnsupportedParam(f"tol must be > 0, got {tol}")
    X = np.asarray(X, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    w = check_sample_weight(sample_weight, X.shape[0])
    Xs, ys, X_offset, y_offset = _preprocess(X, y, w, fit_intercept)
    return _solve(Xs, ys, X_offset, y_offset, alpha, l1_ratio, max_iter, tol, coef_init, raise_on_fail)


def _solve(Xs, ys, X_offset, y_offset, alpha, l1_ratio, max_iter, tol, coef_init, raise_on_fail):
    n_features = Xs.shape[1]
    l1_reg = alpha * l1_ratio
    l2_reg = alpha * (1.0 - l1_ratio)
    coef = np.zeros(n_features) if coef_init is None else np.array(coef_init, dtype=np.float64)
    norms = np.einsum("ij,ij->j", Xs, Xs)
    R = ys - Xs @ coef
    gap = np.inf
    n_iter = 0
    for n_iter in range(1, max_iter + 1):
        for j in range(n_features):
            if norms[j] == 0.0:
                coef[j] = 0.0
                continue
            old = coef[j]
            col = Xs[:, j]
            rho = col @ R + norms[j] * old
            new = np.sign(rho) * max(abs(rho) - l1_reg, 0.0) / (norms[j] + l2_reg)
            if new != old:
                R -= (new - old) * col
                coef[j] = new
        R = ys - Xs @ coef
        gap = enet_dual_gap(Xs, ys, coef, l1_reg, l2_reg, residual=R)
        if gap <= tol:
            break
    else:
        if raise_on_fail:
            raise NotConverged(
                f"coordinate descent did not reach duality gap {tol} in {max_iter} sweeps "
                f"(gap={gap:.3e})",
                diagnostics={"coef": coef, "dual_gap": gap, "n_iter": n_iter},
            )
    intercept = y_offset - float(X_offset @ coef)
    return LinearFit(coef=coef, intercept=intercept, dual_gap=float(gap), n_iter=n_iter)


class LinearModel(BaseEstimator, RegressorMixin):
    def predict(self, X):
        X = self._validate_for_predict(X)
        return X @ self.coef_ + self.intercept_


class ElasticNet(LinearModel):
    """Linear regression with combined L1 and L2 penalties.

    Parameters
    ----------
    alpha : float, default=1.0
        Penalty strength. ``alpha=0`` reduces to ordinary least squares.
    l1_ratio : float, default=0.5
        ``1.0`` is the Lasso, ``0.0`` is ridge regression.
    fit_intercept : bool, default=True
    max_iter : int, default=1000
        Maximum coordinate sweeps.
    tol : float, default=1e-4
        Duality-gap threshold.

    Attributes
    ----------
    coef_ : ndarray of shape (n_features,)
    intercept_ : float
    dual_gap_ : float
    n_iter_ : int
    """

    def __init__(self, alpha=1.0, l1_ratio=0.5, fit_intercept=True, max_iter=1000, tol=1e-4):
        self.alpha = alpha
        self.l1_ratio = l1_ratio
        self.fit_intercept = fit_intercept
        self.max_iter = max_iter
        self.tol = tol

    def fit(self, X, y, sample_weight=None):
        X, y = check_X_y(X, y, y_numeric=True)
        result = enet_coordinate_descent(
            X,
            y,
            alpha=self.alpha,
            l1_ratio=self.l1_ratio,
            sample_weight=sample_weight,
            fit_intercept=self.fit_intercept,
            max_iter=self.max_iter,
            tol=self.tol,
        )
        self._check_n_features(X, reset=True)
        self.coef_ = result.coef
        self.intercept_ = result.intercept
        self.dual_gap_ = result.dual_gap
        self.n_iter_ = result.n_iter
        return self._freeze()


class Lasso(ElasticNet):
    """Elastic Net with ``l1_ratio`` fixed at 1."""

    def __init__(self, alpha=1.0, fit_intercept=True, max_iter=1000, tol=1e-4):
        super().__init__(alpha=alpha, l1_ratio=1.0, fit_intercept=fit_intercept, max_iter=max_iter, tol=tol)
