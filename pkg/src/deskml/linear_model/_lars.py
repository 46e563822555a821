"""Least-angle regression and its Lasso modification.

The path is parametrized by ``lam = max_j |x_j . r| / n`` so that knots are
directly comparable with the coordinate-descent Lasso at ``alpha = lam``.
The residual ``r`` is carried from knot to knot by subtracting the step
taken along the equiangular direction; it is never rebuilt as ``y - X coef``
inside the loop.
"""

import warnings
from dataclasses import dataclass, field

import numpy as np

from ..base import check_X_y, reject_sample_weight
from ..exceptions import DegenerateDesign
from ._coordinate_descent import LinearModel

_TIE_RTOL = 1e-10
_COLLINEAR_RTOL = 1e-10


@dataclass(frozen=True)
class LarsPath:
    """Knots of a (Lasso-)LARS path.

    Attributes
    ----------
    lambdas : ndarray of shape (n_knots,)
        Strictly decreasing penalty values.
    coefs : ndarray of shape (n_knots, n_features)
        Weights at each knot; linear in lambda between adjacent knots.
    active : list of tuple
        Features with nonzero weight at each knot, in order of entry.
    drops : list of (knot, feature)
        Lasso drop events: ``feature`` left the active set at ``knot``.
    collinear : list of int
        Features that were left out at least once because they were
        exactly collinear with the active set when they tied for entry.
    residuals : ndarray of shape (n_knots, n_samples) or None
        The incrementally updated (centered) residual at each knot.
    X_offset, y_offset
        Centering applied before the path was computed.
    """

    lambdas: np.ndarray
    coefs: np.ndarray
    active: list
    drops: list = field(default_factory=list)
    collinear: list = field(default_factory=list)
    residuals: np.ndarray = None
    X_offset: np.ndarray = None
    y_offset: float = 0.0

    @property
    def knots(self):
        return list(zip(self.lambdas.tolist(), self.coefs))

    def coef_at(self, lam):
        """Weights at penalty ``lam`` by linear interpolation between knots."""
        lambdas = self.lambdas
        if lam >= lambdas[0]:
            return self.coefs[0].copy() if lam == lambdas[0] else np.zeros_like(self.coefs[0])
        if lam <= lambdas[-1]:
            return self.coefs[-1].copy()
        k = np.searchsorted(-lambdas, -lam)  # lambdas[k-1] > lam >= lambdas[k]
        hi, lo = lambdas[k - 1], lambdas[k]
        t = (hi - lam) / (hi - lo)
        return (1 - t) * self.coefs[k - 1] + t * self.coefs[k]


def lars_path(
    X,
    y,
    max_knots=None,
    lasso_mode=True,
    fit_intercept=True,
    alpha_min=0.0,
    return_residuals=False,
):
    """Compute the LARS or Lasso-LARS regularization path.

    Parameters
    ----------
    X : array-like of shape (n_samples, n_features)
    y : array-like of shape (n_samples,)
    max_knots : int or None
        Stop after this many knots (the first knot, at the largest lambda
        with all weights zero, counts).
    lasso_mode : bool
        Apply the Lasso modification: a weight crossing zero leaves the
        active set, which makes every knot a Lasso solution.
    fit_intercept : bool
        Center X and y first.
    alpha_min : float
        Stop the path at this lambda instead of 0.
    return_residuals : bool
        Keep the incremental residual at every knot.

    Returns
    -------
    LarsPath
    """
    X, y = check_X_y(X, y, y_numeric=True)
    n, p = X.shape
    if fit_intercept:
        X_offset = X.mean(axis=0)
        y_offset = float(y.mean())
        X = X - X_offset
        y = y - y_offset
    else:
        X_offset = np.zeros(p)
        y_offset = 0.0

    coef = np.zeros(p)
    r = y.copy()
    c = X.T @ r / n
    C = float(np.max(np.abs(c)))
    scale = max(C, float(np.max(np.abs(X.T @ y))) / n, np.finfo(float).tiny)
    tiny = 1e-13 * scale

    active = []
    excluded = set()  # tied features currently collinear with the active set
    ever_excluded = set()
    drops = []
    lambdas, coefs, actives, residuals = [], [], [], []

    def record(lam):
        lambdas.append(max(lam, 0.0))
        coefs.append(coef.copy())
        actives.append(tuple(active))
        if return_residuals:
            residuals.append(r.copy())

    def admit(C, skip):
        """Move every inactive feature whose |correlation| ties the maximum into
        the active set, unless it is collinear with the features already there.

        Ties are visited in index order, so of a collinear group entering
        together the higher-indexed feature is the one left out. A feature
        left out earlier is checked again, since drops change the active set.
        """
        excluded.clear()
        bar = C - _TIE_RTOL * scale
        for j in np.flatnonzero(np.abs(c) >= bar):
            j = int(j)
            if j in active or j == skip:
                continue
            if _is_collinear(X, active, j):
                excluded.add(j)
                if j not in ever_excluded:
                    ever_excluded.add(j)
                    warnings.warn(
                        f"feature {j} is collinear with the active set {active}; left out",
                        DegenerateDesign,
                        stacklevel=3,
                    )
                continue
            active.append(j)

    if C <= tiny or C <= alpha_min:
        # y is orthogonal to every column: the whole path is zero
        record(0.0 if C <= tiny else C)
        return _finish(lambdas, coefs, actives, drops, ever_excluded, residuals, X_offset, y_offset)

    record(C)
    admit(C, skip=None)
    just_dropped = None

    while True:
        if max_knots is not None and len(lambdas) >= max_knots:
            break
        if not active:
            # every active weight was dropped; restart from the current maxima
            admit(C, skip=just_dropped)
            if not active:
                break
        A = np.asarray(active)
        s = np.sign(c[A])
        XA = X[:, A]
        G = XA.T @ XA / n
        d = np.linalg.solve(G, s)
        u = XA @ d
        a = X.T @ u / n

        gamma = C - alpha_min
        event = "end"
        who = None

        inactive = np.ones(p, dtype=bool)
        inactive[A] = False
        if excluded:
            inactive[list(excluded)] = False
        if just_dropped is not None:
            inactive[just_dropped] = False
        for j in np.flatnonzero(inactive):
            for num, den in ((C - c[j], 1.0 - a[j]), (C + c[j], 1.0 + a[j])):
                if den > 1e-12:
                    g = num / den
                    if tiny < g < gamma:
                        gamma, event, who = g, "add", int(j)

        if lasso_mode:
            for pos, j in enumerate(active):
                if d[pos] != 0.0:
                    g = -coef[j] / d[pos]
                    if tiny < g < gamma:
                        gamma, event, who = g, "drop", j

        coef[A] += gamma * d
        r -= gamma * u
        C -= gamma
        c = X.T @ r / n
        just_dropped = None

        if event == "drop":
            coef[who] = 0.0
            active.remove(who)
            drops.append((len(lambdas), who))
            just_dropped = who
        if event == "end" or C <= tiny:
            record(max(C, alpha_min) if alpha_min > 0 else 0.0)
            break
        record(C)
        admit(C, skip=just_dropped)

    return _finish(lambdas, coefs, actives, drops, ever_excluded, residuals, X_offset, y_offset)


def _is_collinear(X, active, j):
    xj = X[:, j]
    norm2 = float(xj @ xj)
    if norm2 == 0.0:
        return True
    if not active:
        return False
    XA = X[:, active]
    t, *_ = np.linalg.lstsq(XA, xj, rcond=None)
    resid = xj - XA @ t
    return float(resid @ resid) <= _COLLINEAR_RTOL * norm2


def _finish(lambdas, coefs, actives, drops, excluded, residuals, X_offset, y_offset):
    return LarsPath(
        lambdas=np.asarray(lambdas),
        coefs=np.asarray(coefs),
        active=actives,
        drops=drops,
        collinear=sorted(excluded),
        residuals=np.asarray(residuals) if residuals else None,
        X_offset=X_offset,
        y_offset=y_offset,
    )


class LassoLars(LinearModel):
    """Lasso fitted with the LARS path, stopped at ``alpha``.

    Parameters
    ----------
    alpha : float, default=1.0
        Same scale as :class:`Lasso`'s ``alpha``.
    fit_intercept : bool, default=True
    max_knots : int or None, default=None
    """

    def __init__(self, alpha=1.0, fit_intercept=True, max_knots=None):
        self.alpha = alpha
        self.fit_intercept = fit_intercept
        self.max_knots = max_knots

    def fit(self, X, y, sample_weight=None):
        reject_sample_weight(self, sample_weight)
        X, y = check_X_y(X, y, y_numeric=True)
        path = lars_path(
            X, y, max_knots=self.max_knots, lasso_mode=True,
            fit_intercept=self.fit_intercept, alpha_min=self.alpha,
        )
        self._check_n_features(X, reset=True)
        self.coef_ = path.coef_at(self.alpha)
        self.intercept_ = path.y_offset - float(path.X_offset @ self.coef_)
        self.n_knots_ = len(path.lambdas)
        self.lambdas_ = path.lambdas
        return self._freeze()
