from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..base import (
    BaseEstimator,
    ClassifierMixin,
    check_array,
    check_sample_weight,
    check_X_y,
    encode_labels,
)
from ..exceptions import ShapeMismatch, SingleClass, UnsupportedParam
from ._smo import Kernel, smo


@dataclass(frozen=True)
class SvcModel:
    """A fitted binary SVM.

    Attributes
    ----------
    support_indices : ndarray
        Rows of the training set with ``alpha > 0``.
    support_vectors : ndarray of shape (n_support, n_features)
    dual_coefs : ndarray
        ``alpha_i * y_i`` for each support vector.
    bias : float
    kernel : Kernel
    alpha : ndarray
        Dual variables for every training row.
    C : ndarray
        Per-sample box bounds ``C * sample_weight``.
    n_iter : int
    """

    support_indices: np.ndarray
    support_vectors: np.ndarray
    dual_coefs: np.ndarray
    bias: float
    kernel: Kernel
    alpha: np.ndarray
    C: np.ndarray
    n_iter: int


def svc_fit(X, y, C=1.0, kernel=None, sample_weight=None, tol=1e-3, max_iter=None,
            cache_size=200, debug=False):
    """Fit a binary SVM on labels in {-1, +1}.

    ``sample_weight`` scales each sample's box bound: ``0 <= alpha_i <= C * w_i``.
    """
    X = check_array(X)
    y = np.asarray(y, dtype=np.float64)
    if y.shape[0] != X.shape[0]:
        raise ShapeMismatch(f"X has {X.shape[0]} rows but y has {y.shape[0]} entries")
    if not np.isin(y, (-1.0, 1.0)).all():
        raise UnsupportedParam("svc_fit expects labels in {-1, +1}")
    if np.unique(y).size < 2:
        raise SingleClass("SVC needs samples from two classes")
    if not C > 0:
        raise UnsupportedParam(f"C must be > 0, got {C}")
    kernel = kernel or Kernel("linear")
    w = check_sample_weight(sample_weight, X.shape[0])
    bounds = C * w
    res = smo(X, y, bounds, kernel, tol=tol, max_iter=max_iter, cache_size=cache_size, debug=debug)
    support = np.flatnonzero(res.alpha > 0)
    return SvcModel(
        support_indices=support,
        support_vectors=X[support].copy(),
        dual_coefs=res.alpha[support] * y[support],
        bias=res.bias,
        kernel=kernel,
        alpha=res.alpha,
        C=bounds,
        n_iter=res.n_iter,
    )


def svc_decision(model, X, block=1024):
    """Signed decision values ``sum_j dual_coef_j K(sv_j, x) + bias``."""
    X = np.asarray(X, dtype=np.float64)
    out = np.empty(X.shape[0])
    for start in range(0, X.shape[0], block):
        chunk = X[start:start + block]
        out[start:start + block] = model.kernel(chunk, model.support_vectors) @ model.dual_coefs + model.bias
    return out


class SVC(BaseEstimator, ClassifierMixin):
    """Kernel support vector classifier trained by SMO.

    Two classes give a single binary machine; more classes are handled
    one-vs-one with majority voting.

    Parameters
    ----------
    C : float, default=1.0
        Box penalty; each sample's bound is ``C * sample_weight[i]``.
    kernel : {"linear", "rbf", "poly"}, default="rbf"
    gamma : float or "auto", default="auto"
        Kernel width for ``rbf``/``poly``; ``"auto"`` is ``1 / n_features``.
    degree : int, default=3
    coef0 : float, default=0.0
    tol : float, default=1e-3
        KKT violation tolerance.
    max_iter : int or None, default=None
        SMO pair updates per binary problem; ``None`` is ``max(1000 * n_samples, 100000)``.
    cache_size : int, default=200
        Kernel rows kept in memory.
    debug : bool, default=False
        Check that the dual objective never decreases.

    Attributes
    ----------
    classes_ : ndarray
    models_ : list of SvcModel
        One per class pair, in ``pairs_`` order.
    pairs_ : list of (int, int)
        Class-code pairs ``(a, b)``, ``a < b``; positive decision favors ``b``.
    """

    def __init__(self, C=1.0, kernel="rbf", gamma="auto", degree=3, coef0=0.0, tol=1e-3,
                 max_iter=None, cache_size=200, debug=False):
        self.C = C
        self.kernel = kernel
        self.gamma = gamma
        self.degree = degree
        self.coef0 = coef0
        self.tol = tol
        self.max_iter = max_iter
        self.cache_size = cache_size
        self.debug = debug

    def _kernel(self, n_features):
        gamma = 1.0 / n_features if self.gamma == "auto" else float(self.gamma)
        return Kernel(self.kernel, gamma=gamma, degree=self.degree, coef0=self.coef0)

    def fit(self, X, y, sample_weight=None):
        X, y = check_X_y(X, y)
        w = check_sample_weight(sample_weight, X.shape[0])
        classes, codes = encode_labels(y)
        if len(classes) < 2:
            raise SingleClass(f"SVC needs at least two classes, got {classes.tolist()}")
        kernel = self._kernel(X.shape[1])
        pairs = list(combinations(range(len(classes)), 2))
        models = []
        for a, b in pairs:
            rows = np.flatnonzero((codes == a) | (codes == b))
            yy = np.where(codes[rows] == b, 1.0, -1.0)
            models.append(svc_fit(
                X[rows], yy, C=self.C, kernel=kernel, sample_weight=w[rows], tol=self.tol,
                max_iter=self.max_iter, cache_size=self.cache_size, debug=self.debug,
            ))
        self._check_n_features(X, reset=True)
        self.classes_ = classes
        self.pairs_ = pairs
        self.models_ = models
        if len(classes) == 2:
            m = models[0]
            self.support_ = m.support_indices
            self.dual_coef_ = m.dual_coefs
            self.intercept_ = m.bias
        return self._freeze()

    def decision_function(self, X):
        """Binary: shape (n_samples,). Multiclass: (n_samples, n_pairs)."""
        X = self._validate_for_predict(X, allow_empty=True)
        values = np.column_stack([svc_decision(m, X) for m in self.models_]) \
            if X.shape[0] else np.empty((0, len(self.models_)))
        return values[:, 0] if len(self.classes_) == 2 else values

    def predict(self, X):
        X = self._validate_for_predict(X, allow_empty=True)
        if len(self.classes_) == 2:
            return self.classes_[(self.decision_function(X) > 0).astype(np.intp)]
        dec = self.decision_function(X)
        return self.classes_[_vote(dec, self.pairs_, len(self.classes_))]


def _vote(dec, pairs, n_classes):
    """One-vs-one voting. Ties go to the larger summed |decision| of winning
    pairwise votes, then to the lower class index."""
    n = dec.shape[0]
    votes = np.zeros((n, n_classes))
    strength = np.zeros((n, n_classes))
    rows = np.arange(n)
    for p, (a, b) in enumerate(pairs):
        d = dec[:, p]
        winner = np.where(d > 0, b, a)
        votes[rows, winner] += 1
        strength[rows, winner] += np.abs(d)
    out = np.empty(n, dtype=np.intp)
    for r in range(n):
        top = np.flatnonzero(votes[r] == votes[r].max())
        out[r] = top[np.argmax(strength[r, top])]
    return out
