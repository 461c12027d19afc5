"""scikit-learn style wrapper around the antithickening pipeline.

The estimator behaves like a clustering model: fitting a trigraph groups its
vertices into the parts of the optimal antithickening, and ``labels_`` gives
each vertex's reduced vertex.  There is no ``transform`` because a fitted
model says nothing about vertices of another trigraph.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from .antithicken import optimal_antithickening
from .exceptions import DomainError
from .trigraph import Trigraph

__all__ = ["OptimalAntithickening", "check_trigraph"]


def check_trigraph(X) -> Trigraph:
    """Accept a :class:`Trigraph` or a symmetric square matrix over {-1, 0, 1}.

    The diagonal of a matrix is ignored.
    """
    if isinstance(X, Trigraph):
        return X
    arr = np.asarray(X)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DomainError(f"expected a square adjacency matrix, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.number):
        raise DomainError(f"adjacency matrix must be numeric, got dtype {arr.dtype}")
    n = arr.shape[0]
    off = arr[~np.eye(n, dtype=bool)] if n else arr.ravel()
    if not np.all(np.isin(off, (-1, 0, 1))):
        raise DomainError("off-diagonal entries must be -1, 0 or 1")
    if not np.array_equal(arr, arr.T):
        raise DomainError("adjacency matrix must be symmetric")
    return Trigraph.from_matrix(arr.astype(int).tolist())


class OptimalAntithickening(ClusterMixin, BaseEstimator):
    """Group the vertices of a claw-free trigraph into thickening parts.

    Parameters
    ----------
    force : bool
        Run on degenerate input instead of rejecting it.
    recheck : bool
        Verify the map and the laminarity of the reduced trigraph.

    Attributes
    ----------
    labels_ : ndarray of shape (n,)
        Reduced vertex of every input vertex.
    reduced_ : Trigraph
    map_ : ThickeningMap
    contracted_pairs_ : tuple of CliquePair
    n_parts_ : int
    """

    def __init__(self, force: bool = False, recheck: bool = True):
        self.force = force
        self.recheck = recheck

    def fit(self, X, y=None):
        G = check_trigraph(X)
        result = optimal_antithickening(G, force=self.force, recheck=self.recheck)
        self.reduced_ = result.reduced
        self.map_ = result.map
        self.contracted_pairs_ = result.contracted_pairs
        self.labels_ = np.asarray(result.map.labels(), dtype=int)
        self.n_parts_ = result.reduced.n
        self.n_features_in_ = G.n
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X).labels_

    def reduced_matrix(self) -> np.ndarray:
        check_is_fitted(self, "reduced_")
        return np.asarray(self.reduced_.to_matrix(), dtype=int)
