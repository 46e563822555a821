"""Synthetic twin of the Madelon benchmark data."""

import itertools
from dataclasses import dataclass

import numpy as np

from ..exceptions import BadSpec

_MAX_CLUSTERS = 32


@dataclass(frozen=True)
class MadelonSpec:
    """Settings for :func:`make_madelon`.

    The defaults reproduce Madelon's published shape (4400 x 500, 5
    informative and 15 redundant features).
    """

    n_samples: int = 4400
    n_features: int = 500
    n_informative: int = 5
    n_redundant: int = 15
    class_sep: float = 2.0
    flip_fraction: float = 0.01
    seed: int = 0

    def validate(self):
        if self.n_samples < 2:
            raise BadSpec(f"n_samples must be >= 2, got {self.n_samples}")
        if self.n_informative < 1:
            raise BadSpec(f"n_informative must be >= 1, got {self.n_informative}")
        if self.n_redundant < 0:
            raise BadSpec(f"n_redundant must be >= 0, got {self.n_redundant}")
        if self.n_informative + self.n_redundant > self.n_features:
            raise BadSpec(
                f"n_informative + n_redundant = {self.n_informative + self.n_redundant} "
                f"exceeds n_features = {self.n_features}"
            )
        if not self.class_sep > 0:
            raise BadSpec(f"class_sep must be > 0, got {self.class_sep}")
        if not 0.0 <= self.flip_fraction < 1.0:
            raise BadSpec(f"flip_fraction must lie in [0, 1), got {self.flip_fraction}")
        return self

    @property
    def shape(self):
        return (self.n_samples, self.n_features)


DESK_SCALE = MadelonSpec(n_samples=1100, n_features=125)


def _vertex_label(v):
    s = v.sum()
    return int(s > 0 or (s == 0 and v[0] > 0))


def _hypercube_vertices(d, rng):
    if 2**d <= _MAX_CLUSTERS:
        return np.array(list(itertools.product((-1.0, 1.0), repeat=d)))
    picked = set()
    while len(picked) < _MAX_CLUSTERS:
        picked.add(tuple(rng.choice((-1.0, 1.0), size=d)))
    return np.array(sorted(picked))


def make_madelon(spec=None, **overrides):
    """Generate a Madelon-style binary classification problem.

    Gaussian clusters sit on vertices of a hypercube in the informative
    subspace (side ``2 * class_sep``). Vertices are labeled by the sign of
    their coordinate sum, so the classes are linearly separable in the
    informative subspace up to cluster spread, while each class is still
    multimodal. Redundant features are random linear combinations of the
    informative ones; the rest is standard normal noise. Finally a
    ``flip_fraction`` share of labels is inverted.

    Columns are ordered informative, redundant, noise.

    Returns
    -------
    X : ndarray of shape (n_samples, n_features)
    y : ndarray of shape (n_samples,) with values in {-1, +1}
    """
    spec = spec or MadelonSpec()
    if overrides:
        spec = MadelonSpec(**{**spec.__dict__, **overrides})
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    n, d_inf, d_red = spec.n_samples, spec.n_informative, spec.n_redundant

    vertices = _hypercube_vertices(d_inf, rng)
    vlabels = np.array([_vertex_label(v) for v in vertices])
    by_class = [np.flatnonzero(vlabels == c) for c in (0, 1)]

    y01 = rng.permutation(np.arange(n) % 2)
    cluster = np.empty(n, dtype=np.intp)
    for c in (0, 1):
        rows = np.flatnonzero(y01 == c)
        cluster[rows] = rng.choice(by_class[c], size=len(rows))
    informative = spec.class_sep * vertices[cluster] + rng.standard_normal((n, d_inf))

    mix = rng.uniform(-1.0, 1.0, size=(d_inf, d_red))
    redundant = informative @ mix
    noise = rng.standard_normal((n, spec.n_features - d_inf - d_red))
    X = np.hstack([informative, redundant, noise])

    n_flip = int(np.floor(spec.flip_fraction * n))
    if n_flip:
        flip = rng.choice(n, size=n_flip, replace=False)
        y01[flip] = 1 - y01[flip]
    y = np.where(y01 == 1, 1, -1)
    return X, y
