"""Declarative estimator construction and a functional fit/predict surface.

An :class:`EstimatorSpec` names an algorithm and its hyperparameters; unknown
names are rejected when the spec is created, and an empty parameter map
means "all defaults".

>>> spec = EstimatorSpec("knn", {"n_neighbors": 3})
>>> model = fit(spec, [[0.0], [1.0], [2.0]], ["a", "a", "b"])
>>> predict(model, [[0.1]]).tolist()
['a']
"""

from dataclasses import dataclass, field

from .base import clone
from .cluster import KMeans
from .decomposition import PCA
from .exceptions import UnsupportedParam, WrongCapability
from .linear_model import ElasticNet, Lasso, LassoCV, LassoLars
from .neighbors import KNeighborsClassifier
from .pipeline import Identity, Pipeline
from .svm import SVC

REGISTRY = {
    "elastic_net": ElasticNet,
    "lasso": Lasso,
    "lasso_lars": LassoLars,
    "lasso_cv": LassoCV,
    "svc": SVC,
    "knn": KNeighborsClassifier,
    "pca": PCA,
    "kmeans": KMeans,
    "identity": Identity,
}

SUPERVISED = {"elastic_net", "lasso", "lasso_lars", "lasso_cv", "svc", "knn"}


@dataclass(frozen=True)
class EstimatorSpec:
    """Algorithm identifier plus hyperparameters.

    ``kind="pipeline"`` takes ``params={"steps": [(name, EstimatorSpec), ...]}``.
    """

    kind: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind == "pipeline":
            if set(self.params) != {"steps"}:
                raise UnsupportedParam("a pipeline spec takes exactly one parameter, 'steps'")
            return
        cls = REGISTRY.get(self.kind)
        if cls is None:
            raise UnsupportedParam(f"unknown estimator kind {self.kind!r}; known: {sorted(REGISTRY)}")
        unknown = set(self.params) - set(cls._param_names())
        if unknown:
            raise UnsupportedParam(
                f"{self.kind} has no parameters {sorted(unknown)}; valid: {cls._param_names()}"
            )

    @property
    def supervised(self):
        if self.kind == "pipeline":
            return self.params["steps"][-1][1].supervised
        return self.kind in SUPERVISED

    def build(self):
        """Instantiate an unfitted estimator."""
        if self.kind == "pipeline":
            return Pipeline([(name, step.build()) for name, step in self.params["steps"]])
        return REGISTRY[self.kind](**self.params)


def fit(spec, X, y=None, sample_weight=None):
    """Build ``spec`` (or clone an estimator instance) and fit it.

    ``sample_weight`` is only accepted by SVC, Elastic Net/Lasso and k-means;
    other estimators raise :class:`UnsupportedParam`.
    """
    est = spec.build() if isinstance(spec, EstimatorSpec) else clone(spec)
    supervised = spec.supervised if isinstance(spec, EstimatorSpec) else y is not None
    if supervised and y is None:
        raise UnsupportedParam(f"{type(est).__name__} is supervised and needs y")
    kwargs = {} if sample_weight is None else {"sample_weight": sample_weight}
    if supervised:
        return est.fit(X, y, **kwargs)
    if y is not None and isinstance(spec, EstimatorSpec):
        raise UnsupportedParam(f"{spec.kind} is unsupervised and takes no y")
    return est.fit(X, **kwargs)


def _method(model, name):
    method = getattr(model, name, None)
    if method is None:
        raise WrongCapability(f"{type(model).__name__} has no {name}()")
    return method


def predict(model, X):
    return _method(model, "predict")(X)


def transform(model, X):
    return _method(model, "transform")(X)


def score(model, X, y):
    return _method(model, "score")(X, y)
