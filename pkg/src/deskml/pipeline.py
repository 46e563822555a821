"""Chain transformers and a final estimator into one estimator."""

from .base import BaseEstimator, TransformerMixin, check_array, clone, reject_sample_weight
from .exceptions import NonTransformerStep, UnsupportedParam, WrongCapability


class Identity(BaseEstimator, TransformerMixin):
    """Transformer that returns its input unchanged (after validation)."""

    def fit(self, X, y=None, sample_weight=None):
        reject_sample_weight(self, sample_weight)
        X = check_array(X)
        self._check_n_features(X, reset=True)
        return self

    def transform(self, X):
        return self._validate_for_predict(X).copy()


class Pipeline(BaseEstimator):
    """Sequence of ``(name, estimator)`` steps.

    Every step but the last must implement ``fit`` and ``transform``.
    Step parameters are addressed as ``"name.param"`` by ``get_params`` and
    ``set_params``, which lets :class:`GridSearchCV` tune all steps.
    """

    def __init__(self, steps):
        self.steps = list(steps)
        self._validate_steps()

    def _validate_steps(self):
        names = [name for name, _ in self.steps]
        if not names:
            raise UnsupportedParam("a pipeline needs at least one step")
        if len(set(names)) != len(names):
            raise UnsupportedParam(f"duplicate step names in {names}")
        for name in names:
            if "." in name:
                raise UnsupportedParam(f"step name {name!r} must not contain '.'")
        for name, est in self.steps[:-1]:
            if not (hasattr(est, "fit") and hasattr(est, "transform")):
                raise NonTransformerStep(f"step {name!r} ({type(est).__name__}) has no transform()")

    @property
    def named_steps(self):
        return dict(self.steps)

    @property
    def _final(self):
        return self.steps[-1][1]

    @property
    def _estimator_type(self):
        return getattr(self._final, "_estimator_type", None)

    @property
    def classes_(self):
        return self._final.classes_

    def get_params(self, deep=True):
        params = {"steps": self.steps}
        if deep:
            for name, est in self.steps:
                params[name] = est
                for key, value in est.get_params(deep=True).items():
                    params[f"{name}.{key}"] = value
        return params

    def set_params(self, **params):
        if "steps" in params:
            self.steps = list(params.pop("steps"))
        nested = {}
        for key, value in params.items():
            name, dot, sub = key.partition(".")
            if name not in self.named_steps:
                raise UnsupportedParam(f"pipeline has no step {name!r}")
            if not dot:
                self.steps = [(n, value if n == name else e) for n, e in self.steps]
            else:
                nested.setdefault(name, {})[sub] = value
        for name, sub_params in nested.items():
            self.named_steps[name].set_params(**sub_params)
        self._validate_steps()
        return self

    def _clone(self):
        return Pipeline([(name, clone(est)) for name, est in self.steps])

    def __repr__(self):
        return f"Pipeline({self.steps!r})"

    def fit(self, X, y=None, **fit_params):
        Xt = check_array(X)
        self.n_features_in_ = Xt.shape[1]
        for _, est in self.steps[:-1]:
            est.fit(Xt, y)
            Xt = est.transform(Xt)
        if y is None:
            self._final.fit(Xt, **fit_params)
        else:
            self._final.fit(Xt, y, **fit_params)
        return self

    def _transform_through(self, X):
        Xt = X
        for _, est in self.steps[:-1]:
            Xt = est.transform(Xt)
        return Xt

    def _final_method(self, name):
        method = getattr(self._final, name, None)
        if method is None:
            raise WrongCapability(f"final step {type(self._final).__name__} has no {name}()")
        return method

    def predict(self, X):
        method = self._final_method("predict")
        return method(self._transform_through(X))

    def decision_function(self, X):
        method = self._final_method("decision_function")
        return method(self._transform_through(X))

    def transform(self, X):
        method = self._final_method("transform")
        return method(self._transform_through(X))

    def fit_transform(self, X, y=None, **fit_params):
        return self.fit(X, y, **fit_params).transform(X)

    def score(self, X, y=None):
        method = self._final_method("score")
        Xt = self._transform_through(X)
        return method(Xt) if y is None else method(Xt, y)


def make_pipeline(*estimators):
    """Pipeline with step names taken from the lower-cased class names."""
    steps, seen = [], {}
    for est in estimators:
        name = type(est).__name__.lower()
        seen[name] = seen.get(name, 0) + 1
        steps.append((name if seen[name] == 1 else f"{name}{seen[name]}", est))
    return Pipeline(steps)
