"""Sequential minimal optimization for the weighted soft-margin SVM dual.

Solves::

    min_a  0.5 a^T Q a - sum(a)
    s.t.   0 <= a_i <= C_i,   y^T a = 0,     Q_ij = y_i y_j K(x_i, x_j)

with per-sample bounds ``C_i = C * w_i``. The working pair is the maximal
KKT-violating pair; the solver stops once the violation gap ``m - M`` drops
below ``tol``.
"""

from collections import OrderedDict
from dataclasses import dataclass

import numpy as np

from ..exceptions import NotConverged, UnsupportedParam

_TAU = 1e-12


@dataclass(frozen=True)
class Kernel:
    """Kernel function. ``name`` is one of ``linear``, ``rbf``, ``poly``."""

    name: str = "rbf"
    gamma: float = 1.0
    degree: int = 3
    coef0: float = 0.0

    def __post_init__(self):
        if self.name not in ("linear", "rbf", "poly"):
            raise UnsupportedParam(f"unknown kernel {self.name!r}")
        if self.name != "linear" and not self.gamma > 0:
            raise UnsupportedParam(f"gamma must be > 0, got {self.gamma}")

    def diag(self, A):
        """``K(a, a)`` for every row of ``A``."""
        sq = np.einsum("ij,ij->i", A, A)
        if self.name == "linear":
            return sq
        if self.name == "poly":
            return (self.gamma * sq + self.coef0) ** self.degree
        return np.ones(A.shape[0])

    def __call__(self, A, B):
        """Gram block ``K(A_i, B_j)`` of shape (len(A), len(B))."""
        if self.name == "linear":
            return A @ B.T
        if self.name == "poly":
            return (self.gamma * (A @ B.T) + self.coef0) ** self.degree
        sq = (
            np.einsum("ij,ij->i", A, A)[:, None]
            + np.einsum("ij,ij->i", B, B)[None, :]
            - 2.0 * (A @ B.T)
        )
        np.maximum(sq, 0.0, out=sq)
        return np.exp(-self.gamma * sq)


class KernelCache:
    """Least-recently-used cache of kernel rows ``K(X, X[i])``."""

    def __init__(self, X, kernel, size=200):
        self.X = X
        self.kernel = kernel
        self.size = max(int(size), 2)
        self._rows = OrderedDict()
        self.diag = kernel.diag(X)
        self.hits = 0
        self.misses = 0

    def row(self, i):
        row = self._rows.get(i)
        if row is not None:
            self._rows.move_to_end(i)
            self.hits += 1
            return row
        self.misses += 1
        row = self.kernel(self.X, self.X[i:i + 1])[:, 0]
        self._rows[i] = row
        if len(self._rows) > self.size:
            self._rows.popitem(last=False)
        return row


@dataclass(frozen=True)
class SmoResult:
    alpha: np.ndarray
    bias: float
    n_iter: int
    gap: float
    objective: float


def dual_objective(alpha, grad):
    """``sum(a) - 0.5 a^T Q a`` from the gradient ``Q a - 1`` (maximized)."""
    return float(0.5 * alpha.sum() - 0.5 * alpha @ grad)


def smo(X, y, C, kernel, tol=1e-3, max_iter=None, cache_size=200, debug=False):
    """Solve the weighted SVM dual.

    Parameters
    ----------
    X : ndarray of shape (n_samples, n_features)
    y : ndarray of shape (n_samples,) with entries in {-1, +1}
    C : ndarray of shape (n_samples,)
        Per-sample upper bounds.
    kernel : Kernel
    tol : float
        Stopping threshold on the maximal KKT violation.
    max_iter : int or None
        Cap on pair updates; ``None`` means ``max(1000 * n_samples, 100000)``.
    cache_size : int
        Kernel rows kept in the LRU cache.
    debug : bool
        Assert that the dual objective never decreases.

    Returns
    -------
    SmoResult
    """
    n = X.shape[0]
    y = np.asarray(y, dtype=np.float64)
    C = np.asarray(C, dtype=np.float64)
    if max_iter is None:
        max_iter = max(1000 * n, 100_000)
    cache = KernelCache(X, kernel, cache_size)
    alpha = np.zeros(n)
    grad = -np.ones(n)
    pos = y > 0
    neg = ~pos
    objective = 0.0
    gap = np.inf

    it = 0
    while True:
        F = -y * grad
        at_upper = alpha >= C
        at_lower = alpha <= 0
        up = (pos & ~at_upper) | (neg & ~at_lower)
        low = (neg & ~at_upper) | (pos & ~at_lower)
        if not up.any() or not low.any():
            gap = 0.0
            break
        F_up = np.where(up, F, -np.inf)
        F_low = np.where(low, F, np.inf)
        i = int(np.argmax(F_up))
        j = int(np.argmin(F_low))
        gap = F_up[i] - F_low[j]
        if gap < tol:
            break
        if it >= max_iter:
            raise NotConverged(
                f"SMO hit {max_iter} iterations with KKT violation {gap:.3e} > tol={tol}",
                diagnostics={"alpha": alpha, "gap": gap, "n_iter": it},
            )
        it += 1

        Ki = cache.row(i)
        Kj = cache.row(j)
        Qii, Qjj = cache.diag[i], cache.diag[j]
        Kij = Ki[j]
        ai_old, aj_old = alpha[i], alpha[j]
        Ci, Cj = C[i], C[j]
        ai, aj = ai_old, aj_old
        if y[i] != y[j]:
            quad = max(Qii + Qjj - 2.0 * Kij, _TAU)
            delta = (-grad[i] - grad[j]) / quad
            diff = ai - aj
            ai += delta
            aj += delta
            if diff > 0:
                if aj < 0:
                    aj = 0.0
                    ai = diff
            elif ai < 0:
                ai = 0.0
                aj = -diff
            if diff > Ci - Cj:
                if ai > Ci:
                    ai = Ci
                    aj = Ci - diff
            elif aj > Cj:
                aj = Cj
                ai = Cj + diff
        else:
            quad = max(Qii + Qjj - 2.0 * Kij, _TAU)
            delta = (grad[i] - grad[j]) / quad
            total = ai + aj
            ai -= delta
            aj += delta
            if total > Ci:
                if ai > Ci:
                    ai = Ci
                    aj = total - Ci
            elif aj < 0:
                aj = 0.0
                ai = total
            if total > Cj:
                if aj > Cj:
                    aj = Cj
                    ai = total - Cj
            elif ai < 0:
                ai = 0.0
                aj = total
        alpha[i], alpha[j] = ai, aj
        dai, daj = ai - ai_old, aj - aj_old
        # grad += Q[:, i] dai + Q[:, j] daj with Q[:, t] = y * y_t * K[:, t]
        grad += y * (y[i] * dai * Ki + y[j] * daj * Kj)

        if debug:
            new_obj = dual_objective(alpha, grad)
            assert new_obj >= objective - 1e-10 * max(1.0, abs(objective)), (
                f"dual objective decreased at iteration {it}: {objective} -> {new_obj}"
            )
            objective = new_obj

    F = -y * grad
    free = (alpha > 0) & (alpha < C)
    if free.any():
        bias = float(F[free].mean())
    else:
        up = (pos & (alpha < C)) | (neg & (alpha > 0))
        low = (neg & (alpha < C)) | (pos & (alpha > 0))
        hi = F[up].max() if up.any() else F[low].min()
        lo = F[low].min() if low.any() else hi
        bias = float(0.5 * (hi + lo))
    return SmoResult(
        alpha=alpha, bias=bias, n_iter=it, gap=float(max(gap, 0.0)),
        objective=dual_objective(alpha, grad),
    )
