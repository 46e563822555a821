"""Ball tree for exact Euclidean k-nearest-neighbor search.

Nodes are stored in flat arrays. Node ``i`` owns ``idx[start[i]:end[i]]``;
internal nodes have exactly two children. Points are split at the median of
the dimension with the largest spread.

Results are ordered by ``(distance, index)``. Tree and brute-force search
compute point distances with the same expression, so both return identical
neighbor lists, ties included.
"""

import heapq

import numpy as np

from ..base import check_array
from ..exceptions import KTooLarge, UnsupportedParam

# Guard against rounding in the lower bound ``|q - c| - r``; pruning only
# happens when the bound clears the current k-th distance by this margin.
_PRUNE_RTOL = 1e-9


def sq_distances(A, q):
    """Squared Euclidean distances from each row of ``A`` to ``q``."""
    diff = A - q
    return (diff * diff).sum(axis=-1)


class BallTree:
    """Binary ball tree over the rows of ``X``.

    Parameters
    ----------
    X : array-like of shape (n_samples, n_features)
    leaf_size : int, default=30
        Maximum number of points in a leaf.

    Attributes
    ----------
    data : ndarray
    idx : ndarray of shape (n_samples,)
        Permutation of row indices; each node owns a contiguous slice.
    start, end : ndarray of shape (n_nodes,)
    left, right : ndarray of shape (n_nodes,)
        Child node ids, ``-1`` for leaves.
    centroids : ndarray of shape (n_nodes, n_features)
    radii : ndarray of shape (n_nodes,)
    """

    def __init__(self, X, leaf_size=30):
        self.data = check_array(X)
        if leaf_size < 1:
            raise UnsupportedParam(f"leaf_size must be >= 1, got {leaf_size}")
        self.leaf_size = int(leaf_size)
        n = self.data.shape[0]
        self.idx = np.arange(n)
        start, end, left, right, centroids, radii = [], [], [], [], [], []

        def build(lo, hi):
            node = len(start)
            pts = self.data[self.idx[lo:hi]]
            c = pts.mean(axis=0)
            start.append(lo)
            end.append(hi)
            left.append(-1)
            right.append(-1)
            centroids.append(c)
            radii.append(float(np.sqrt(sq_distances(pts, c).max())))
            if hi - lo > self.leaf_size:
                spread = pts.max(axis=0) - pts.min(axis=0)
                dim = int(np.argmax(spread))
                order = np.lexsort((self.idx[lo:hi], pts[:, dim]))
                self.idx[lo:hi] = self.idx[lo:hi][order]
                mid = lo + (hi - lo) // 2
                left[node] = build(lo, mid)
                right[node] = build(mid, hi)
            return node

        build(0, n)
        self.start = np.asarray(start)
        self.end = np.asarray(end)
        self.left = np.asarray(left)
        self.right = np.asarray(right)
        self.centroids = np.asarray(centroids)
        self.radii = np.asarray(radii)
        for arr in (self.data, self.idx, self.start, self.end, self.left, self.right,
                    self.centroids, self.radii):
            arr.flags.writeable = False

    @property
    def n_nodes(self):
        return len(self.start)

    def is_leaf(self, node):
        return self.left[node] < 0

    def query(self, Q, k=1):
        """k nearest training rows for each row of ``Q``.

        Returns
        -------
        dist : ndarray of shape (n_queries, k)
        ind : ndarray of shape (n_queries, k)
        """
        Q = np.atleast_2d(np.asarray(Q, dtype=np.float64))
        n = self.data.shape[0]
        if k > n:
            raise KTooLarge(f"k={k} exceeds the {n} indexed points")
        dist = np.empty((Q.shape[0], k))
        ind = np.empty((Q.shape[0], k), dtype=np.intp)
        for r, q in enumerate(Q):
            d, i = self._query_one(q, k)
            dist[r], ind[r] = d, i
        return dist, ind

    def _query_one(self, q, k):
        # max-heap of the best k as (-sq_dist, -index)
        heap = []

        def worst():
            return -heap[0][0] if len(heap) == k else np.inf

        def visit(node):
            dc = float(np.sqrt(sq_distances(self.centroids[node], q)))
            lb = dc - self.radii[node]
            if len(heap) == k and lb > np.sqrt(worst()) * (1.0 + _PRUNE_RTOL):
                return
            if self.is_leaf(node):
                rows = self.idx[self.start[node]:self.end[node]]
                for dd, ii in zip(sq_distances(self.data[rows], q).tolist(), rows.tolist()):
                    item = (-dd, -ii)
                    if len(heap) < k:
                        heapq.heappush(heap, item)
                    elif item > heap[0]:
                        heapq.heapreplace(heap, item)
                return
            a, b = self.left[node], self.right[node]
            da = sq_distances(self.centroids[a], q)
            db = sq_distances(self.centroids[b], q)
            if db < da:
                a, b = b, a
            visit(a)
            visit(b)

        visit(0)
        best = sorted((-d, -i) for d, i in heap)
        return np.sqrt([d for d, _ in best]), np.array([i for _, i in best], dtype=np.intp)


def knn_query(tree, q, k):
    """Indices of the ``k`` training points nearest to ``q``, ordered by (distance, index)."""
    return tree.query(np.asarray(q, dtype=np.float64)[None, :], k)[1][0]


def brute_force_knn(X, Q, k, block=64):
    """Exhaustive k-nearest-neighbor search with the same ordering as :class:`BallTree`."""
    X = np.asarray(X, dtype=np.float64)
    Q = np.atleast_2d(np.asarray(Q, dtype=np.float64))
    n = X.shape[0]
    if k > n:
        raise KTooLarge(f"k={k} exceeds the {n} training points")
    dist = np.empty((Q.shape[0], k))
    ind = np.empty((Q.shape[0], k), dtype=np.intp)
    for s in range(0, Q.shape[0], block):
        D = sq_distances(X[None, :, :], Q[s:s + block, None, :])
        order = np.argsort(D, axis=1, kind="stable")[:, :k]
        ind[s:s + block] = order
        dist[s:s + block] = np.sqrt(np.take_along_axis(D, order, axis=1))
    return dist, ind
