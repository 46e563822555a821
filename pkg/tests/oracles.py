"""Independent reference computations used as test oracles.

Nothing here imports deskml: each oracle is a direct, slow, obviously
correct computation of the quantity a solver is supposed to produce.
"""

import itertools

import numpy as np


def ols(X, y, fit_intercept=True):
    """Least squares through the normal equations."""
    if fit_intercept:
        A = np.column_stack([X, np.ones(len(X))])
        sol = np.linalg.solve(A.T @ A, A.T @ y)
        return sol[:-1], sol[-1]
    return np.linalg.solve(X.T @ X, X.T @ y), 0.0


def soft_threshold(z, t):
    return np.sign(z) * np.maximum(np.abs(z) - t, 0.0)


def enet_primal(X, y, coef, intercept, alpha, l1_ratio, sample_weight=None):
    """Weighted Elastic Net objective with loss normalized by the weight sum."""
    w = np.ones(len(y)) if sample_weight is None else np.asarray(sample_weight, float)
    r = y - X @ coef - intercept
    return (
        0.5 * np.sum(w * r**2) / w.sum()
        + alpha * l1_ratio * np.abs(coef).sum()
        + 0.5 * alpha * (1 - l1_ratio) * coef @ coef
    )


def lasso_dual_gap(X, y, coef, alpha):
    """Duality gap of ``(1/2n)||y - Xb||^2 + alpha ||b||_1`` (no intercept).

    Uses the rescaled residual as the dual point:
    ``theta = r / max(n * alpha, ||X^T r||_inf)``.
    """
    n = len(y)
    r = y - X @ coef
    primal = 0.5 * r @ r / n + alpha * np.abs(coef).sum()
    scale = max(n * alpha, np.max(np.abs(X.T @ r)))
    theta = r / scale
    dual = (y @ theta) * alpha - 0.5 * n * alpha**2 * theta @ theta
    return primal - dual


def svm_dual_bruteforce(K, y, C):
    """Exact optimum of the SVM dual by enumerating all active sets.

    Maximizes ``sum(a) - 0.5 a^T Q a`` with ``Q = (y y^T) * K``,
    ``0 <= a_i <= C_i`` and ``y^T a = 0``. Every variable is fixed at 0,
    fixed at its bound, or free; the free block is solved from the KKT
    system of the equality-constrained problem. The best feasible
    candidate is the global optimum (the dual is concave and the optimum
    is the stationary point of its own face). Only usable for tiny n.
    """
    n = len(y)
    C = np.broadcast_to(np.asarray(C, float), (n,))
    Q = np.outer(y, y) * K
    best_val, best_a = -np.inf, None
    for states in itertools.product((0, 1, 2), repeat=n):
        states = np.array(states)
        a = np.where(states == 1, C, 0.0)
        free = np.flatnonzero(states == 2)
        fixed = np.flatnonzero(states != 2)
        if free.size:
            m = free.size
            M = np.zeros((m + 1, m + 1))
            M[:m, :m] = Q[np.ix_(free, free)]
            M[:m, m] = y[free]
            M[m, :m] = y[free]
            rhs = np.concatenate([
                1.0 - Q[np.ix_(free, fixed)] @ a[fixed],
                [-(y[fixed] @ a[fixed])],
            ])
            sol = np.linalg.lstsq(M, rhs, rcond=None)[0]
            a[free] = sol[:m]
        if abs(y @ a) > 1e-9 or (a < -1e-12).any() or (a > C + 1e-12).any():
            continue
        val = a.sum() - 0.5 * a @ Q @ a
        if val > best_val:
            best_val, best_a = val, a.copy()
    return best_val, best_a


def rbf_gram(A, B, gamma):
    d = ((A[:, None, :] - B[None, :, :]) ** 2).sum(-1)
    return np.exp(-gamma * d)


def knn_bruteforce(X, q, k):
    """Indices of the k nearest rows of X to q, ascending by (distance, index)."""
    d = [(float(np.sum((x - q) ** 2)), i) for i, x in enumerate(X)]
    d.sort()
    return [i for _, i in d[:k]]


def topk_variance(X, k):
    """Largest possible variance captured by k orthonormal directions."""
    Xc = X - X.mean(axis=0)
    s = np.linalg.svd(Xc, compute_uv=False)
    return float(np.sum(s[:k] ** 2))


def captured_variance(X, components):
    Xc = X - X.mean(axis=0)
    return float(np.sum((Xc @ np.asarray(components).T) ** 2))


def same_partition(a, b):
    """True when two labelings agree up to a relabeling of clusters."""
    a, b = np.asarray(a), np.asarray(b)
    pairs = set(zip(a.tolist(), b.tolist()))
    return len(pairs) == len(set(a.tolist())) == len(set(b.tolist()))


def matrix_with_spectrum(n, p, singular_values, rng):
    """n x p matrix with prescribed singular values, centered columns."""
    k = len(singular_values)
    U, _ = np.linalg.qr(rng.standard_normal((n, k)))
    U -= U.mean(axis=0)
    U, _ = np.linalg.qr(U)
    V, _ = np.linalg.qr(rng.standard_normal((p, k)))
    return (U * singular_values) @ V.T
