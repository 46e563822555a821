import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from ..base import check_array, clone, is_classifier
from ._split import check_cv


def effective_n_jobs(n_jobs):
    """Worker count after applying the ``BENCH_THREADS`` cap."""
    n = 1 if n_jobs is None else int(n_jobs)
    if n < 1:
        n = os.cpu_count() or 1
    cap = os.environ.get("BENCH_THREADS")
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def parallel_map(fn, tasks, n_jobs=1):
    """``[fn(t) for t in tasks]``, optionally on a thread pool.

    Results come back in task order, so the worker count never changes
    the output.
    """
    tasks = list(tasks)
    n = effective_n_jobs(n_jobs)
    if n == 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ThreadPoolExecutor(max_workers=min(n, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


def _index(y, idx):
    return None if y is None else y[idx]


def fit_and_score(estimator, X, y, train, test, params=None):
    """Clone, set ``params``, fit on ``train`` and score on ``test``."""
    est = clone(estimator)
    if params:
        est.set_params(**params)
    if y is None:
        est.fit(X[train])
        return float(est.score(X[test]))
    est.fit(X[train], y[train])
    return float(est.score(X[test], y[test]))


def cross_val_score(estimator, X, y=None, cv=5, n_jobs=1):
    """Score of ``estimator`` on each split of ``cv``.

    Each split is fitted on a fresh clone. A failure is re-raised with the
    failing split's position stored on the exception as ``split_index``.
    """
    X = check_array(X)
    y = None if y is None else np.asarray(y)
    plan = check_cv(cv, y if y is not None else np.zeros(X.shape[0]), is_classifier(estimator))

    def run(item):
        i, (train, test) = item
        try:
            return fit_and_score(estimator, X, y, train, test)
        except Exception as exc:
            exc.split_index = i
            raise

    return np.array(parallel_map(run, enumerate(plan), n_jobs))
