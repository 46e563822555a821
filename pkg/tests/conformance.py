"""Shared estimator-contract harness.

Each case is a factory plus the kind of data it needs. ``check_estimator``
runs every contract check and raises AssertionError on the first breach.
"""

from dataclasses import dataclass
from typing import Callable

import numpy as np
import pytest

from deskml import (
    PCA,
    SVC,
    ElasticNet,
    GridSearchCV,
    Identity,
    KMeans,
    KNeighborsClassifier,
    Lasso,
    LassoCV,
    LassoLars,
    Pipeline,
    clone,
)
from deskml.exceptions import NotFittedError, ShapeMismatch, UnsupportedParam


@dataclass
class Case:
    name: str
    factory: Callable
    kind: str  # classifier | regressor | transformer | clusterer


def _data(kind, seed=0, n=60, p=6):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n, p))
    if kind == "classifier":
        y = np.where(X[:, 0] + 0.5 * X[:, 1] > 0, "pos", "neg")
        return X, y
    if kind == "regressor":
        return X, X @ rng.standard_normal(p) + 0.1 * rng.standard_normal(n)
    return X, None


CASES = [
    Case("elastic_net", lambda: ElasticNet(alpha=0.1), "regressor"),
    Case("lasso", lambda: Lasso(alpha=0.05), "regressor"),
    Case("lasso_lars", lambda: LassoLars(alpha=0.05), "regressor"),
    Case("lasso_cv", lambda: LassoCV(n_alphas=10, cv=3), "regressor"),
    Case("svc_rbf", lambda: SVC(C=1.0), "classifier"),
    Case("svc_linear", lambda: SVC(kernel="linear"), "classifier"),
    Case("svc_poly", lambda: SVC(kernel="poly", degree=2, coef0=1.0), "classifier"),
    Case("knn_tree", lambda: KNeighborsClassifier(3, algorithm="ball_tree"), "classifier"),
    Case("knn_brute", lambda: KNeighborsClassifier(3, algorithm="brute"), "classifier"),
    Case("pca_exact", lambda: PCA(3, solver="exact"), "transformer"),
    Case("pca_randomized", lambda: PCA(3, solver="randomized", seed=7), "transformer"),
    Case("identity", lambda: Identity(), "transformer"),
    Case("kmeans", lambda: KMeans(3, n_init=3, seed=5), "clusterer"),
    Case("pipeline", lambda: Pipeline([("pca", PCA(3)), ("knn", KNeighborsClassifier(3))]),
         "classifier"),
    Case("grid_search", lambda: GridSearchCV(KNeighborsClassifier(), {"n_neighbors": [1, 3]}, cv=3),
         "classifier"),
]


def _fit(est, X, y):
    return est.fit(X) if y is None else est.fit(X, y)


def _fitted_state(est):
    state = {}
    for key, value in vars(est).items():
        if key.endswith("_") and not key.startswith("_"):
            state[key] = value
    return state


def _assert_identical(a, b, path="state"):
    if isinstance(a, np.ndarray):
        assert a.dtype == b.dtype and a.shape == b.shape, path
        assert np.array_equal(a, b), f"{path} differs between identical fits"
    elif isinstance(a, dict):
        assert a.keys() == b.keys(), path
        for k in a:
            _assert_identical(a[k], b[k], f"{path}.{k}")
    elif isinstance(a, (list, tuple)):
        assert len(a) == len(b), path
        for i, (u, v) in enumerate(zip(a, b)):
            _assert_identical(u, v, f"{path}[{i}]")
    elif hasattr(a, "__dataclass_fields__"):
        _assert_identical(vars(a), vars(b), path)
    elif hasattr(a, "get_params") and hasattr(a, "n_features_in_"):
        _assert_identical(_fitted_state(a), _fitted_state(b), path)
    elif hasattr(a, "__dict__") and type(a).__module__.startswith("deskml"):
        _assert_identical(vars(a), vars(b), path)
    elif isinstance(a, float) and np.isnan(a):
        assert np.isnan(b), path
    else:
        assert a == b, f"{path}: {a!r} != {b!r}"


def check_estimator(case):
    X, y = _data(case.kind)
    est = case.factory()

    # hyperparameters round-trip and clone yields an unfitted twin
    params = est.get_params(deep=False)
    twin = clone(est)
    assert twin is not est
    assert set(twin.get_params(deep=False)) == set(params)
    with pytest.raises(UnsupportedParam):
        clone(est).set_params(not_a_parameter=1)

    # nothing works before fit
    for method in ("predict", "transform", "score"):
        if hasattr(est, method):
            args = (X,) if method != "score" or y is None else (X, y)
            with pytest.raises((NotFittedError, AttributeError)):
                getattr(est, method)(*args)

    assert _fit(est, X, y) is est
    assert est.n_features_in_ == X.shape[1]

    n = X.shape[0]
    bad = np.hstack([X, X[:, :1]])
    if case.kind in ("classifier", "regressor", "clusterer"):
        pred = est.predict(X)
        assert pred.shape == (n,)
        if case.kind == "classifier":
            assert set(np.unique(pred)) <= set(np.unique(y))
            s = est.score(X, y)
            assert 0.0 <= s <= 1.0
        elif case.kind == "regressor":
            assert est.score(X, y) <= 1.0
    if case.kind == "transformer":
        Z = est.transform(X)
        assert Z.shape[0] == n
        assert np.allclose(est.fit_transform(X) if hasattr(est, "fit_transform") else Z, Z)

    for method in ("predict", "transform", "decision_function"):
        if hasattr(est, method):
            try:
                getattr(est, method)(X[:2])
            except AttributeError:
                continue  # capability absent on this configuration
            with pytest.raises(ShapeMismatch):
                getattr(est, method)(bad)
    if hasattr(est, "score") and case.kind != "transformer":
        with pytest.raises(ShapeMismatch):
            est.score(bad, y) if y is not None else est.score(bad)

    # fitted arrays are frozen
    for key, value in _fitted_state(est).items():
        if isinstance(value, np.ndarray) and value.size:
            assert not value.flags.writeable, f"{key} is writable after fit"

    # determinism: identical inputs and seed give bit-identical state
    a = _fit(case.factory(), X, y)
    b = _fit(case.factory(), X, y)
    _assert_identical(_fitted_state(a), _fitted_state(b))
    if case.kind != "transformer":
        assert np.array_equal(a.predict(X), b.predict(X))
    else:
        assert np.array_equal(a.transform(X), b.transform(X))
