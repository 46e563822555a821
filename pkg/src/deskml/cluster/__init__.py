from ._kmeans import KMeans, kmeans_plusplus, lloyd

__all__ = ["KMeans", "kmeans_plusplus", "lloyd"]
