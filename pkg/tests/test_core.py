import doctest
import warnings

import numpy as np
import pytest

import deskml.estimators
from deskml import PCA, SVC, ElasticNet, EstimatorSpec, KMeans, KNeighborsClassifier, clone
from deskml import fit, predict, score, transform
from deskml.base import check_array, encode_labels
from deskml.exceptions import (
    InvalidInput,
    NotConverged,
    ShapeMismatch,
    UnsupportedParam,
    WrongCapability,
)
from deskml.metrics import accuracy_score, r2_score

from oracles import ols


def test_doctests():
    failures, _ = doctest.testmod(deskml.estimators)
    assert failures == 0


class TestValidation:
    def test_rejects_nan_and_inf(self):
        with pytest.raises(InvalidInput):
            check_array([[1.0, np.nan]])
        with pytest.raises(InvalidInput):
            check_array([[np.inf, 1.0]])

    def test_rejects_empty_and_1d(self):
        with pytest.raises(InvalidInput):
            check_array(np.empty((0, 3)))
        with pytest.raises(InvalidInput):
            check_array([1.0, 2.0])

    def test_returns_contiguous_float(self):
        X = check_array(np.arange(6).reshape(2, 3).T)
        assert X.dtype == np.float64 and X.flags.c_contiguous

    def test_label_encoding_is_contiguous(self):
        classes, codes = encode_labels(["b", "a", "c", "a"])
        assert classes.tolist() == ["a", "b", "c"]
        assert codes.tolist() == [1, 0, 2, 0]
        assert (classes[codes] == ["b", "a", "c", "a"]).all()


class TestEstimatorSpec:
    def test_unknown_param_rejected(self):
        with pytest.raises(UnsupportedParam):
            EstimatorSpec("svc", {"c": 1.0})

    def test_unknown_kind_rejected(self):
        with pytest.raises(UnsupportedParam):
            EstimatorSpec("random_forest")

    def test_empty_params_means_defaults(self):
        assert EstimatorSpec("kmeans").build().get_params() == KMeans().get_params()

    def test_y_required_for_supervised(self):
        with pytest.raises(UnsupportedParam):
            fit(EstimatorSpec("svc"), np.eye(3))

    def test_y_rejected_for_unsupervised(self):
        with pytest.raises(UnsupportedParam):
            fit(EstimatorSpec("pca"), np.eye(3), [0, 1, 0])

    def test_pipeline_spec(self):
        spec = EstimatorSpec("pipeline", {"steps": [
            ("pca", EstimatorSpec("pca", {"n_components": 2})),
            ("knn", EstimatorSpec("knn", {"n_neighbors": 1})),
        ]})
        X = np.random.default_rng(0).standard_normal((20, 4))
        y = (X[:, 0] > 0).astype(int)
        assert spec.supervised
        assert (predict(fit(spec, X, y), X) == y).all()


class TestFitExamples:
    def test_kmeans_k1_is_column_mean(self, rng):
        X = rng.standard_normal((40, 3))
        model = fit(EstimatorSpec("kmeans", {"n_clusters": 1}), X)
        assert np.allclose(model.cluster_centers_[0], X.mean(axis=0), atol=1e-12)

    def test_elastic_net_alpha0_orthonormal_is_xty(self, rng):
        Q, _ = np.linalg.qr(rng.standard_normal((5, 3)))
        y = rng.standard_normal(5)
        model = fit(EstimatorSpec("elastic_net", {"alpha": 0.0, "fit_intercept": False,
                                                  "tol": 1e-12}), Q, y)
        assert np.allclose(model.coef_, Q.T @ y, atol=1e-8)
        assert np.allclose(model.coef_, ols(Q, y, fit_intercept=False)[0], atol=1e-8)

    def test_knn_k1_reproduces_training_labels(self, rng):
        X = rng.standard_normal((30, 4))
        y = rng.integers(0, 3, 30)
        model = fit(EstimatorSpec("knn", {"n_neighbors": 1}), X, y)
        assert (predict(model, X) == y).all()

    def test_weight_length_mismatch(self, rng):
        X = rng.standard_normal((10, 2))
        with pytest.raises(ShapeMismatch):
            fit(EstimatorSpec("elastic_net"), X, X[:, 0], sample_weight=np.ones(9))

    def test_y_length_mismatch(self, rng):
        X = rng.standard_normal((10, 2))
        with pytest.raises(ShapeMismatch):
            fit(EstimatorSpec("svc"), X, [0, 1] * 4)

    @pytest.mark.parametrize("kind", ["knn", "lasso_lars", "pca", "lasso_cv"])
    def test_sample_weight_rejected_where_unsupported(self, kind, rng):
        X = rng.standard_normal((20, 3))
        y = (X[:, 0] > 0).astype(int) if kind != "pca" else None
        with pytest.raises(UnsupportedParam):
            fit(EstimatorSpec(kind), X, y, sample_weight=np.ones(20))

    def test_not_converged_carries_diagnostics(self, rng):
        X = rng.standard_normal((30, 8))
        X[:, 1] = X[:, 0] + 1e-3 * rng.standard_normal(30)
        y = X @ rng.standard_normal(8)
        with pytest.raises(NotConverged) as info:
            ElasticNet(alpha=1e-4, max_iter=2, tol=1e-12).fit(X, y)
        assert {"coef", "dual_gap", "n_iter"} <= set(info.value.diagnostics)


class TestPredictExamples:
    def test_all_same_label(self):
        X = np.array([[0.0], [1.0], [2.0]])
        model = fit(EstimatorSpec("knn", {"n_neighbors": 3}), X, ["a"] * 3)
        assert predict(model, [[-5.0], [9.0]]).tolist() == ["a", "a"]

    def test_linear_model_is_affine(self, rng):
        X = rng.standard_normal((20, 3))
        model = ElasticNet(alpha=0.1).fit(X, rng.standard_normal(20))
        q = rng.standard_normal((4, 3))
        assert np.allclose(model.predict(q), q @ model.coef_ + model.intercept_, atol=0, rtol=0)

    def test_svc_four_separable_points(self):
        X = np.array([[0.0, 0.0], [0.0, 1.0], [3.0, 0.0], [3.0, 1.0]])
        y = np.array([0, 0, 1, 1])
        # the line x = 1.5 separates them; the SVC must find some separator
        assert (X[:, 0] > 1.5).astype(int).tolist() == y.tolist()
        model = SVC(kernel="linear").fit(X, y)
        assert model.score(X, y) == 1.0

    def test_predict_on_transformer_is_wrong_capability(self, rng):
        model = fit(EstimatorSpec("pca"), rng.standard_normal((10, 3)))
        with pytest.raises(WrongCapability):
            predict(model, rng.standard_normal((2, 3)))

    def test_transform_on_classifier_is_wrong_capability(self, rng):
        X = rng.standard_normal((10, 3))
        model = fit(EstimatorSpec("knn", {"n_neighbors": 1}), X, np.arange(10) % 2)
        with pytest.raises(WrongCapability):
            transform(model, X)


class TestTransformExamples:
    def test_full_rank_pca_is_isometry(self, rng):
        X = rng.standard_normal((25, 4))
        Z = PCA(4).fit(X).transform(X)
        dX = np.linalg.norm(X[:, None] - X[None], axis=-1)
        dZ = np.linalg.norm(Z[:, None] - Z[None], axis=-1)
        assert np.allclose(dX, dZ, atol=1e-8)

    def test_rank_one_reconstruction(self, rng):
        X = np.outer(rng.standard_normal(30), rng.standard_normal(5)) + 3.0
        model = PCA(1).fit(X)
        assert np.allclose(model.inverse_transform(model.transform(X)), X, atol=1e-8)

    def test_two_components_match_svd(self, rng):
        X = rng.standard_normal((50, 10))
        Xc = X - X.mean(axis=0)
        s = np.linalg.svd(Xc, compute_uv=False)
        model = PCA(2).fit(X)
        assert abs(model.explained_variance_.sum() - np.sum(s[:2] ** 2) / 49) \
            <= 0.01 * np.sum(s[:2] ** 2) / 49


class TestScore:
    def test_perfect_classifier(self):
        assert accuracy_score([1, 2, 3], [1, 2, 3]) == 1.0

    def test_one_of_four_wrong(self):
        assert accuracy_score([0, 1, 1, 0], [0, 1, 0, 0]) == 0.75

    def test_mean_predictor_r2_is_zero(self):
        y = np.array([1.0, 2.0, 4.0, 7.0])
        assert r2_score(y, np.full(4, y.mean())) == pytest.approx(0.0, abs=1e-15)

    def test_r2_at_most_one(self, rng):
        y = rng.standard_normal(20)
        assert r2_score(y, y) == 1.0
        assert r2_score(y, y + 1) < 1.0

    def test_score_through_functional_api(self, rng):
        X = rng.standard_normal((20, 2))
        y = (X[:, 0] > 0).astype(int)
        model = fit(EstimatorSpec("knn", {"n_neighbors": 1}), X, y)
        assert score(model, X, y) == 1.0


class TestImmutabilityAndClone:
    def test_fitted_arrays_read_only(self, rng):
        model = KMeans(2, n_init=1).fit(rng.standard_normal((10, 2)))
        with pytest.raises(ValueError):
            model.cluster_centers_[0, 0] = 1.0

    def test_clone_is_unfitted(self, rng):
        model = KNeighborsClassifier(1).fit(rng.standard_normal((4, 2)), [0, 1, 0, 1])
        twin = clone(model)
        assert twin.get_params() == model.get_params()
        assert not hasattr(twin, "n_features_in_")

    def test_repr_lists_params(self):
        assert "n_neighbors=3" in repr(KNeighborsClassifier(3))


class TestWeightDuplication:
    """Doubling a weight equals duplicating the row."""

    def test_elastic_net(self, rng):
        X = rng.standard_normal((25, 4))
        y = X @ rng.standard_normal(4) + 0.3 * rng.standard_normal(25)
        w = np.ones(25)
        w[3] = 2.0
        a = ElasticNet(alpha=0.05, tol=1e-12, max_iter=100000).fit(X, y, sample_weight=w)
        Xd, yd = np.vstack([X, X[3:4]]), np.append(y, y[3])
        b = ElasticNet(alpha=0.05, tol=1e-12, max_iter=100000).fit(Xd, yd)
        probe = rng.standard_normal((10, 4))
        assert np.allclose(a.predict(probe), b.predict(probe), atol=1e-6)

    def test_kmeans(self, rng):
        X = np.vstack([rng.normal(0, 0.3, (15, 2)), rng.normal(6, 0.3, (15, 2))])
        w = np.ones(30)
        w[[2, 20]] = 2.0
        a = KMeans(2, n_init=5).fit(X, sample_weight=w)
        b = KMeans(2, n_init=5).fit(np.vstack([X, X[[2, 20]]]))
        ca = a.cluster_centers_[np.argsort(a.cluster_centers_[:, 0])]
        cb = b.cluster_centers_[np.argsort(b.cluster_centers_[:, 0])]
        assert np.allclose(ca, cb, atol=1e-6)
        assert a.inertia_ == pytest.approx(b.inertia_, rel=1e-9)


def test_warnings_are_user_warnings():
    from deskml.exceptions import DegenerateDesign, DuplicateCollapse

    for w in (DegenerateDesign, DuplicateCollapse):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            warnings.warn("x", w)
        assert issubclass(caught[0].category, UserWarning)
