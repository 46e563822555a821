"""Cross-validation iterators.

Each generator returns a :class:`SplitPlan`, an immutable ordered sequence of
``(train_indices, test_indices)`` pairs.
"""

from dataclasses import dataclass

import numpy as np

from ..exceptions import BadK, ClassTooSmall


@dataclass(frozen=True)
class SplitPlan:
    splits: tuple

    def __post_init__(self):
        frozen = []
        for train, test in self.splits:
            train = np.asarray(train, dtype=np.intp)
            test = np.asarray(test, dtype=np.intp)
            train.flags.writeable = False
            test.flags.writeable = False
            frozen.append((train, test))
        object.__setattr__(self, "splits", tuple(frozen))

    def __iter__(self):
        return iter(self.splits)

    def __len__(self):
        return len(self.splits)

    def __getitem__(self, i):
        return self.splits[i]

    @property
    def test_sets(self):
        return [test for _, test in self.splits]


def _fold_sizes(n, k, offset=0):
    """Sizes of ``k`` folds over ``n`` items; the ``n % k`` extra items go
    to folds ``offset, offset+1, ...`` (mod k)."""
    sizes = np.full(k, n // k, dtype=np.intp)
    extra = (offset + np.arange(n % k)) % k
    sizes[extra] += 1
    return sizes


def _plan_from_folds(n, folds):
    everything = np.arange(n)
    splits = []
    for test in folds:
        test = np.sort(np.asarray(test, dtype=np.intp))
        mask = np.ones(n, dtype=bool)
        mask[test] = False
        splits.append((everything[mask], test))
    return SplitPlan(tuple(splits))


def kfold(n, k=5, shuffle=False, seed=None):
    """K-fold split of ``range(n)``.

    Without shuffling, test folds are contiguous index ranges and the first
    ``n % k`` folds hold one extra item.
    """
    n, k = int(n), int(k)
    if k < 2 or k > n:
        raise BadK(f"need 2 <= k <= n, got k={k}, n={n}")
    order = np.arange(n)
    if shuffle:
        order = np.random.default_rng(seed).permutation(n)
    bounds = np.concatenate([[0], np.cumsum(_fold_sizes(n, k))])
    return _plan_from_folds(n, [order[bounds[i]:bounds[i + 1]] for i in range(k)])


def leave_one_out(n):
    n = int(n)
    if n < 2:
        raise BadK(f"leave-one-out needs n >= 2, got {n}")
    return _plan_from_folds(n, [[i] for i in range(n)])


def stratified_kfold(y, k=5, shuffle=False, seed=None):
    """K-fold split preserving class proportions.

    Members of each class (in index order, or shuffled) are cut into ``k``
    contiguous chunks whose sizes differ by at most one; remainders rotate
    across classes so the overall fold sizes stay balanced. With a single
    class this is exactly :func:`kfold`.
    """
    y = np.asarray(y)
    n, k = y.shape[0], int(k)
    if k < 2 or k > n:
        raise BadK(f"need 2 <= k <= n, got k={k}, n={n}")
    classes, codes = np.unique(y, return_inverse=True)
    counts = np.bincount(codes)
    if (counts < k).any():
        small = classes[counts < k]
        raise ClassTooSmall(f"classes {small.tolist()} have fewer than k={k} members")
    rng = np.random.default_rng(seed) if shuffle else None
    if shuffle and len(classes) == 1:
        return kfold(n, k, shuffle=True, seed=seed)
    folds = [[] for _ in range(k)]
    offset = 0
    for c in range(len(classes)):
        members = np.flatnonzero(codes == c)
        if rng is not None:
            members = rng.permutation(members)
        sizes = _fold_sizes(len(members), k, offset)
        bounds = np.concatenate([[0], np.cumsum(sizes)])
        for f in range(k):
            folds[f].extend(members[bounds[f]:bounds[f + 1]].tolist())
        offset = (offset + len(members) % k) % k
    return _plan_from_folds(n, folds)


def check_cv(cv, y=None, classifier=False):
    """Turn ``cv`` (int, SplitPlan or iterable of pairs) into a SplitPlan.

    An integer becomes stratified K-fold for classifiers, plain K-fold
    otherwise.
    """
    if isinstance(cv, SplitPlan):
        return cv
    if cv is None:
        cv = 5
    if isinstance(cv, (int, np.integer)):
        if y is None:
            raise BadK("an integer cv needs y to know the sample count")
        if classifier:
            return stratified_kfold(y, cv)
        return kfold(len(y), cv)
    return SplitPlan(tuple(cv))
