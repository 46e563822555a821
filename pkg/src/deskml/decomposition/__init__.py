from ._pca import PCA, randomized_range_finder, randomized_svd

__all__ = ["PCA", "randomized_range_finder", "randomized_svd"]
