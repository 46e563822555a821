"""
Support vectors and neighbors on the same data
==============================================

An RBF support vector classifier and a nearest-neighbor vote on a noisy
two-class problem. The ball tree returns exactly what brute force does.
"""

# %%
import numpy as np

from deskml import SVC, KNeighborsClassifier
from deskml.model_selection import cross_val_score
from deskml.neighbors import BallTree, brute_force_knn

rng = np.random.default_rng(3)
X = rng.standard_normal((300, 2))
y = np.where(X[:, 0] ** 2 + X[:, 1] ** 2 + 0.3 * rng.standard_normal(300) > 1.4, "out", "in")

# %%
for name, model in [("svc", SVC(C=3.0, gamma=1.0)), ("knn", KNeighborsClassifier(9))]:
    scores = cross_val_score(model, X, y, cv=5)
    print(f"{name}: mean accuracy {scores.mean():.3f}")

svc = SVC(C=3.0, gamma=1.0).fit(X, y)
print("support vectors:", len(svc.support_))

# %%
# Tree queries against brute force.
Q = rng.standard_normal((50, 2))
tree_d, tree_i = BallTree(X, leaf_size=16).query(Q, 5)
brute_d, brute_i = brute_force_knn(X, Q, 5)
print("identical neighbors:", np.array_equal(tree_i, brute_i))
