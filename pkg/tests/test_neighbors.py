import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deskml import KNeighborsClassifier
from deskml.exceptions import KTooLarge, ShapeMismatch
from deskml.neighbors import BallTree, brute_force_knn, choose_strategy, knn_query

from oracles import knn_bruteforce


def check_structure(tree, leaf_size):
    n = tree.data.shape[0]
    leaves = []
    for node in range(tree.n_nodes):
        rows = tree.idx[tree.start[node]:tree.end[node]]
        d = np.sqrt(((tree.data[rows] - tree.centroids[node]) ** 2).sum(axis=1))
        assert tree.radii[node] >= d.max()
        if tree.is_leaf(node):
            assert len(rows) <= leaf_size
            leaves.append(rows)
        else:
            a, b = tree.left[node], tree.right[node]
            assert tree.start[a] == tree.start[node] and tree.end[b] == tree.end[node]
            assert tree.end[a] == tree.start[b]
    all_rows = np.concatenate(leaves)
    assert sorted(all_rows.tolist()) == list(range(n))


class TestBallTree:
    def test_small_set_is_single_leaf(self):
        tree = BallTree(np.random.default_rng(0).standard_normal((20, 3)), leaf_size=30)
        assert tree.n_nodes == 1 and tree.is_leaf(0)
        assert sorted(tree.idx.tolist()) == list(range(20))

    @pytest.mark.parametrize("leaf_size", [1, 3, 10])
    def test_containment_and_partition(self, leaf_size):
        X = np.random.default_rng(1).standard_normal((100, 2))
        check_structure(BallTree(X, leaf_size), leaf_size)

    def test_duplicates(self):
        X = np.vstack([np.ones((10, 2)), np.zeros((10, 2))])
        tree = BallTree(X, leaf_size=2)
        check_structure(tree, 2)
        ind = knn_query(tree, np.array([1.0, 1.0]), 10)
        assert ind.tolist() == list(range(10))

    def test_deterministic(self):
        X = np.random.default_rng(2).standard_normal((50, 4))
        a, b = BallTree(X, 5), BallTree(X, 5)
        assert np.array_equal(a.idx, b.idx) and np.array_equal(a.radii, b.radii)

    def test_immutable(self):
        tree = BallTree(np.random.default_rng(2).standard_normal((50, 4)), 5)
        with pytest.raises(ValueError):
            tree.radii[0] = 0.0

    def test_query_self_first(self):
        X = np.random.default_rng(3).standard_normal((60, 3))
        tree = BallTree(X, 4)
        for i in range(60):
            assert knn_query(tree, X[i], 3)[0] == i

    def test_seeded_matches_bruteforce(self):
        rng = np.random.default_rng(4)
        X = rng.standard_normal((200, 5))
        tree = BallTree(X, 10)
        for q in rng.standard_normal((50, 5)):
            assert knn_query(tree, q, 7).tolist() == knn_bruteforce(X, q, 7)

    def test_equidistant_lower_index_first(self):
        X = np.array([[1.0, 0.0], [0.0, 5.0], [-1.0, 0.0], [0.0, 1.0]])
        tree = BallTree(X, 1)
        assert knn_query(tree, np.zeros(2), 3).tolist() == [0, 2, 3]

    def test_k_too_large(self):
        with pytest.raises(KTooLarge):
            BallTree(np.eye(3)).query(np.zeros((1, 3)), 4)


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(1, 80), p=st.integers(1, 6), leaf=st.integers(1, 12),
    seed=st.integers(0, 2**32 - 1), grid=st.booleans(), data=st.data(),
)
def test_tree_equals_bruteforce_property(n, p, leaf, seed, grid, data):
    rng = np.random.default_rng(seed)
    X = rng.integers(-2, 3, (n, p)).astype(float) if grid else rng.standard_normal((n, p))
    Q = rng.integers(-2, 3, (5, p)).astype(float) if grid else rng.standard_normal((5, p))
    k = data.draw(st.integers(1, n))
    td, ti = BallTree(X, leaf).query(Q, k)
    bd, bi = brute_force_knn(X, Q, k)
    assert np.array_equal(ti, bi) and np.array_equal(td, bd)


class TestClassifier:
    def test_auto_strategy_is_pure_function_of_dims(self):
        assert choose_strategy(20) == "ball_tree"
        assert choose_strategy(21) == "brute"
        assert choose_strategy(5, dim_threshold=4) == "brute"
        X = np.random.default_rng(0).standard_normal((10, 25))
        assert KNeighborsClassifier(1).fit(X, np.arange(10) % 2).strategy_ == "brute"

    def test_k_equals_n_gives_global_majority(self):
        rng = np.random.default_rng(5)
        X = rng.standard_normal((11, 2))
        y = np.array([0] * 6 + [1] * 5)
        pred = KNeighborsClassifier(11).fit(X, y).predict(rng.standard_normal((20, 2)))
        assert (pred == 0).all()

    def test_strategies_agree(self):
        rng = np.random.default_rng(6)
        X = rng.standard_normal((300, 10))
        y = (X[:, 0] + X[:, 1] ** 2 > 1).astype(int)
        Q = rng.standard_normal((100, 10))
        a = KNeighborsClassifier(5, algorithm="ball_tree").fit(X, y).predict(Q)
        b = KNeighborsClassifier(5, algorithm="brute").fit(X, y).predict(Q)
        assert np.array_equal(a, b)

    def test_k1_reproduces_training_labels(self):
        rng = np.random.default_rng(7)
        X = rng.standard_normal((50, 3))
        y = rng.choice(["x", "y", "z"], 50)
        assert (KNeighborsClassifier(1).fit(X, y).predict(X) == y).all()

    def test_vote_tie_smaller_distance_sum(self):
        X = np.array([[1.0], [-2.0], [10.0]])
        y = np.array(["far", "near", "near"])
        # k=2 from 0.4: neighbours 1.0 (far, d=0.6) and -2.0 (near, d=2.4): tie 1-1
        assert KNeighborsClassifier(2).fit(X, y).predict([[0.4]]).tolist() == ["far"]
        # from -0.6: 1.0 (far, d=1.6) and -2.0 (near, d=1.4)
        assert KNeighborsClassifier(2).fit(X, y).predict([[-0.6]]).tolist() == ["near"]

    def test_vote_tie_equal_distance_lower_class(self):
        X = np.array([[1.0], [-1.0]])
        y = np.array(["b", "a"])
        assert KNeighborsClassifier(2).fit(X, y).predict([[0.0]]).tolist() == ["a"]

    def test_k_too_large(self):
        with pytest.raises(KTooLarge):
            KNeighborsClassifier(5).fit(np.eye(3), [0, 1, 0])

    def test_shape_mismatch(self):
        model = KNeighborsClassifier(1).fit(np.eye(3), [0, 1, 0])
        with pytest.raises(ShapeMismatch):
            model.predict(np.eye(2))
