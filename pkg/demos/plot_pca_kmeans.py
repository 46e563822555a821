"""
Projecting, then clustering
===========================

Randomized PCA recovers nearly all of the top-k variance; k-means then
groups the projected points.
"""

# %%
import numpy as np

from deskml import PCA, KMeans

rng = np.random.default_rng(7)
centers = rng.standard_normal((4, 200)) * 4
X = np.repeat(centers, 150, axis=0) + rng.standard_normal((600, 200))

# %%
exact = PCA(9, solver="exact").fit(X)
fast = PCA(9, solver="randomized", seed=0).fit(X)
print("variance ratio, exact:     ", np.round(exact.explained_variance_ratio_[:4], 3))
print("variance ratio, randomized:", np.round(fast.explained_variance_ratio_[:4], 3))

# %%
Z = fast.transform(X)
km = KMeans(4, seed=0).fit(Z)
print("cluster sizes:", np.bincount(km.labels_))
print("inertia per restart:", np.round(km.run_inertias_, 1))
