"""Estimator contract: base class, mixins and input validation.

Estimators follow a convention rather than a deep hierarchy: hyperparameters
are stored verbatim by ``__init__``, learned state is written by ``fit`` to
attributes ending in an underscore, and ``predict`` / ``transform`` /
``score`` are available according to what the estimator can do.
"""

import inspect

import numpy as np

from .exceptions import (
    InvalidInput,
    NotFittedError,
    ShapeMismatch,
    UnsupportedParam,
)
from .metrics import accuracy_score, r2_score


def check_array(X, name="X", allow_empty=False):
    """Validate a data matrix and return it as a C-contiguous float64 array.

    Parameters
    ----------
    X : array-like of shape (n_samples, n_features)
    name : str
        Used in error messages.
    allow_empty : bool
        Accept zero rows (query-time only).

    Returns
    -------
    ndarray of shape (n_samples, n_features)

    Raises
    ------
    InvalidInput
        If ``X`` is not 2-D, is empty, or contains NaN/Inf.
    """
    try:
        X = np.ascontiguousarray(X, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise InvalidInput(f"{name} is not a real-valued matrix: {exc}") from None
    if X.ndim != 2:
        raise InvalidInput(f"{name} must be 2-D, got shape {X.shape}")
    if (X.shape[0] < 1 and not allow_empty) or X.shape[1] < 1:
        raise InvalidInput(f"{name} must have at least one row and one column, got {X.shape}")
    if not np.isfinite(X).all():
        raise InvalidInput(f"{name} contains NaN or infinite entries")
    return X


def check_X_y(X, y, y_numeric=False):
    X = check_array(X)
    y = np.asarray(y)
    if y.ndim != 1:
        y = y.ravel() if y.ndim == 2 and 1 in y.shape else y
    if y.ndim != 1:
        raise ShapeMismatch(f"y must be 1-D, got shape {y.shape}")
    if y.shape[0] != X.shape[0]:
        raise ShapeMismatch(f"X has {X.shape[0]} rows but y has {y.shape[0]} entries")
    if y_numeric:
        y = y.astype(np.float64)
        if not np.isfinite(y).all():
            raise InvalidInput("y contains NaN or infinite entries")
    return X, y


def check_sample_weight(sample_weight, n_samples):
    """Return a float64 weight vector of length ``n_samples`` (ones if None)."""
    if sample_weight is None:
        return np.ones(n_samples)
    w = np.asarray(sample_weight, dtype=np.float64).ravel()
    if w.shape[0] != n_samples:
        raise ShapeMismatch(f"sample_weight has {w.shape[0]} entries, expected {n_samples}")
    if not np.isfinite(w).all() or (w < 0).any():
        raise InvalidInput("sample_weight must be finite and nonnegative")
    if w.sum() <= 0:
        raise InvalidInput("sample_weight must not be all zero")
    return w


def reject_sample_weight(estimator, sample_weight):
    if sample_weight is not None:
        raise UnsupportedParam(f"{type(estimator).__name__} does not accept sample_weight")


def encode_labels(y):
    """Map class identifiers to 0..K-1.

    Returns ``(classes, codes)`` where ``classes[codes] == y``; classes are
    sorted, so the encoding does not depend on row order.
    """
    classes, codes = np.unique(np.asarray(y), return_inverse=True)
    return classes, codes.astype(np.intp)


class BaseEstimator:
    """Base class providing parameter introspection and fitted-state helpers."""

    @classmethod
    def _param_names(cls):
        init = cls.__init__
        if init is object.__init__:
            return []
        sig = inspect.signature(init)
        return sorted(
            p.name
            for p in sig.parameters.values()
            if p.name != "self" and p.kind not in (p.VAR_POSITIONAL, p.VAR_KEYWORD)
        )

    def get_params(self, deep=True):
        params = {name: getattr(self, name) for name in self._param_names()}
        return params

    def set_params(self, **params):
        valid = set(self._param_names())
        for key, value in params.items():
            if key not in valid:
                raise UnsupportedParam(
                    f"{type(self).__name__} has no parameter {key!r}; valid: {sorted(valid)}"
                )
            setattr(self, key, value)
        return self

    def __repr__(self):
        args = ", ".join(f"{k}={v!r}" for k, v in self.get_params(deep=False).items())
        return f"{type(self).__name__}({args})"

    def _check_n_features(self, X, reset):
        if reset:
            self.n_features_in_ = X.shape[1]
            return
        check_is_fitted(self)
        if X.shape[1] != self.n_features_in_:
            raise ShapeMismatch(
                f"X has {X.shape[1]} features, but {type(self).__name__} "
                f"was fitted with {self.n_features_in_}"
            )

    def _validate_for_predict(self, X, allow_empty=False):
        X = check_array(X, allow_empty=allow_empty)
        self._check_n_features(X, reset=False)
        return X

    def _freeze(self):
        """Mark every learned array read-only once fit is complete."""
        for key, value in vars(self).items():
            if key.endswith("_") and isinstance(value, np.ndarray):
                value.flags.writeable = False
        return self


def check_is_fitted(estimator):
    if not hasattr(estimator, "n_features_in_"):
        raise NotFittedError(f"{type(estimator).__name__} is not fitted yet; call fit first")


def clone(estimator):
    """Return an unfitted copy with identical hyperparameters."""
    if hasattr(estimator, "_clone"):
        return estimator._clone()
    params = estimator.get_params(deep=False)
    return type(estimator)(**params)


class ClassifierMixin:
    _estimator_type = "classifier"

    def score(self, X, y):
        """Mean accuracy of ``predict(X)`` against ``y``."""
        X = self._validate_for_predict(X)
        y = np.asarray(y)
        if y.shape[0] != X.shape[0]:
            raise ShapeMismatch(f"X has {X.shape[0]} rows but y has {y.shape[0]} entries")
        return accuracy_score(y, self.predict(X))


class RegressorMixin:
    _estimator_type = "regressor"

    def score(self, X, y):
        """Coefficient of determination R^2 of ``predict(X)``."""
        X = self._validate_for_predict(X)
        y = np.asarray(y, dtype=np.float64)
        if y.shape[0] != X.shape[0]:
            raise ShapeMismatch(f"X has {X.shape[0]} rows but y has {y.shape[0]} entries")
        return r2_score(y, self.predict(X))


class TransformerMixin:
    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y, **fit_params).transform(X)


def is_classifier(estimator):
    return getattr(estimator, "_estimator_type", None) == "classifier"
