"""Exhaustive grid search wrapped as an estimator."""

import itertools
import logging

import numpy as np

from ..base import BaseEstimator, check_array, clone, is_classifier
from ..exceptions import NotFittedError, UnknownAxis, WrongCapability
from ._split import check_cv
from ._validation import fit_and_score, parallel_map

logger = logging.getLogger(__name__)


class ParamGrid:
    """Cartesian product of named candidate lists.

    Points are enumerated with axes sorted by name and each axis's
    candidates in the order given, so enumeration is deterministic.
    Pipeline step parameters are addressed as ``"step.param"``.
    """

    def __init__(self, axes):
        if isinstance(axes, ParamGrid):
            axes = axes.axes
        self.axes = {name: list(values) for name, values in axes.items()}
        for name, values in self.axes.items():
            if not values:
                raise UnknownAxis(f"axis {name!r} has no candidates")

    def __iter__(self):
        names = sorted(self.axes)
        for combo in itertools.product(*(self.axes[n] for n in names)):
            yield dict(zip(names, combo))

    def __len__(self):
        return int(np.prod([len(v) for v in self.axes.values()], dtype=np.int64))

    def __getitem__(self, i):
        return list(self)[i]

    def check(self, estimator):
        valid = set(estimator.get_params(deep=True))
        unknown = sorted(set(self.axes) - valid)
        if unknown:
            raise UnknownAxis(
                f"grid axes {unknown} are not parameters of {type(estimator).__name__}; "
                f"valid: {sorted(valid)}"
            )


class GridSearchCV(BaseEstimator):
    """Select hyperparameters by cross-validated score, then refit.

    After ``fit``, ``predict``, ``score``, ``transform`` and
    ``decision_function`` are forwarded to ``best_estimator_``.

    Parameters
    ----------
    estimator : estimator
    param_grid : dict or ParamGrid
    cv : int or SplitPlan, default=5
    n_jobs : int, default=1
        Worker threads over (grid point, split) tasks; capped by the
        ``BENCH_THREADS`` environment variable. Results do not depend on it.

    Attributes
    ----------
    cv_results_ : dict
        ``params``, ``mean_test_score``, ``std_test_score``,
        ``split_scores`` (n_points, n_splits) and ``failed`` per point.
        A point with any failing split scores ``-inf``.
    best_index_, best_params_, best_score_, best_estimator_
    """

    def __init__(self, estimator, param_grid, cv=5, n_jobs=1):
        self.estimator = estimator
        self.param_grid = param_grid
        self.cv = cv
        self.n_jobs = n_jobs

    def fit(self, X, y=None, **fit_params):
        X = check_array(X)
        y = None if y is None else np.asarray(y)
        grid = ParamGrid(self.param_grid)
        grid.check(self.estimator)
        points = list(grid)
        ref = y if y is not None else np.zeros(X.shape[0])
        plan = check_cv(self.cv, ref, is_classifier(self.estimator))

        tasks = [(p, s) for p in range(len(points)) for s in range(len(plan))]

        def run(task):
            p, s = task
            train, test = plan[s]
            try:
                return fit_and_score(self.estimator, X, y, train, test, points[p]), None
            except Exception as exc:  # a failing corner of the grid must not abort the search
                return -np.inf, f"{type(exc).__name__}: {exc}"

        results = parallel_map(run, tasks, self.n_jobs)
        scores = np.array([r[0] for r in results]).reshape(len(points), len(plan))
        errors = [r[1] for r in results]
        failed = np.array([
            any(errors[p * len(plan) + s] is not None for s in range(len(plan)))
            for p in range(len(points))
        ])
        for p in np.flatnonzero(failed):
            logger.warning("grid point %s failed: %s", points[p],
                           next(e for e in errors[p * len(plan):(p + 1) * len(plan)] if e))

        with np.errstate(invalid="ignore"):
            means = np.where(failed, -np.inf, scores.mean(axis=1))
            stds = np.where(failed, np.nan, scores.std(axis=1))
        self.cv_results_ = {
            "params": points,
            "mean_test_score": means,
            "std_test_score": stds,
            "split_scores": scores,
            "failed": failed,
            "errors": errors,
        }
        self.best_index_ = int(np.argmax(means))
        self.best_params_ = points[self.best_index_]
        self.best_score_ = float(means[self.best_index_])
        best = clone(self.estimator).set_params(**self.best_params_)
        if y is None:
            best.fit(X, **fit_params)
        else:
            best.fit(X, y, **fit_params)
        self.best_estimator_ = best
        self.n_features_in_ = X.shape[1]
        return self

    @property
    def refit_model(self):
        return self.best_estimator_

    @property
    def _estimator_type(self):
        return getattr(self.estimator, "_estimator_type", None)

    @property
    def classes_(self):
        return self.best_estimator_.classes_

    def _delegate(self, name):
        if not hasattr(self, "best_estimator_"):
            raise NotFittedError("GridSearchCV is not fitted yet; call fit first")
        method = getattr(self.best_estimator_, name, None)
        if method is None:
            raise WrongCapability(f"{type(self.best_estimator_).__name__} has no {name}()")
        return method

    def predict(self, X):
        return self._delegate("predict")(X)

    def transform(self, X):
        return self._delegate("transform")(X)

    def decision_function(self, X):
        return self._delegate("decision_function")(X)

    def score(self, X, y=None):
        method = self._delegate("score")
        return method(X) if y is None else method(X, y)

    def _clone(self):
        return GridSearchCV(clone(self.estimator), self.param_grid, self.cv, self.n_jobs)
