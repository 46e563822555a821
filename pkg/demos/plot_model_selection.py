"""
Tuning a pipeline with grid search
==================================

A pipeline of PCA and k-nearest neighbors behaves as one estimator, so a
grid can address the parameters of both steps at once.
"""

# %%
import numpy as np

from deskml import PCA, GridSearchCV, KNeighborsClassifier, Pipeline
from deskml.bench import make_madelon

X, y = make_madelon(n_samples=400, n_features=40, seed=1)

# %%
# Step parameters are named ``step.param``.
pipe = Pipeline([("pca", PCA()), ("knn", KNeighborsClassifier())])
grid = {"pca.n_components": [3, 5, 10], "knn.n_neighbors": [1, 5, 15]}
search = GridSearchCV(pipe, grid, cv=5, n_jobs=4).fit(X, y)

for params, mean in zip(search.cv_results_["params"], search.cv_results_["mean_test_score"]):
    print(params, f"{mean:.3f}")

# %%
# The search object is itself an estimator: predictions come from the refit
# best pipeline.
print("best:", search.best_params_, f"{search.best_score_:.3f}")
assert np.array_equal(search.predict(X), search.best_estimator_.predict(X))
