"""
Lasso paths two ways
====================

The LARS path and coordinate descent solve the same Lasso problem. LARS
walks the path knot by knot; coordinate descent solves one penalty at a
time. At every knot the two agree.
"""

# %%
# A small regression problem with a sparse truth.
import numpy as np

from deskml.linear_model import LassoCV, enet_coordinate_descent, lars_path

rng = np.random.default_rng(0)
X = rng.standard_normal((60, 8))
beta = np.array([3.0, -2.0, 0, 0, 1.5, 0, 0, 0])
y = X @ beta + 0.5 * rng.standard_normal(60)

# %%
# Walk the path. Each knot is a penalty where a feature enters or leaves.
path = lars_path(X, y)
for lam, active in zip(path.lambdas, path.active):
    print(f"lambda={lam:8.4f}  active={list(active)}")

# %%
# Solve the same problems by coordinate descent and compare.
worst = 0.0
for lam, coef in zip(path.lambdas, path.coefs):
    cd = enet_coordinate_descent(X, y, alpha=lam, l1_ratio=1.0, tol=1e-12).coef
    worst = max(worst, np.max(np.abs(cd - coef)))
print(f"largest knot disagreement: {worst:.2e}")

# %%
# Cross-validation picks a penalty along a warm-started grid.
model = LassoCV(n_alphas=30, cv=5).fit(X, y)
print("chosen alpha:", round(model.alpha_, 4))
print("weights:", np.round(model.coef_, 2))
