"""Scikit-learn compatible wrappers around the spectral toolkit.

These estimators let the graph operators slot into sklearn pipelines and
model-selection machinery.  `fit` takes the graph (as a Graph value or a
dense 0/1 adjacency matrix) and fixes the eigenbasis; `transform` then
operates on rows of signals.
"""

from __future__ import annotations

from typing import Optional

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .fiedler import default_partition_tol, fiedler, partition
from .operators import igft, gft, translate
from .spectral import eigendecompose
from .validation import as_graph, check_signal_matrix

__all__ = ["GraphFourierTransform", "GraphTranslation", "FiedlerPartition"]


class GraphFourierTransform(BaseEstimator, TransformerMixin):
    """Transformer mapping vertex signals to spectral coefficients.

    Parameters
    ----------
    None.  The basis is a deterministic function of the fitted graph.

    Attributes
    ----------
    basis_ : EigenBasis
        The fixed Laplacian eigenbasis of the fitted graph.
    eigenvalues_ : ndarray of shape (n_vertices,)
    n_vertices_ : int
    """

    def fit(self, X, y=None):
        graph = as_graph(X)
        self.basis_ = eigendecompose(graph)
        self.eigenvalues_ = np.asarray(self.basis_.eigenvalues)
        self.n_vertices_ = graph.n
        return self

    def transform(self, X):
        """Rows of X are vertex signals; returns their coefficient rows."""
        check_is_fitted(self, "basis_")
        signals = check_signal_matrix(X, self.n_vertices_)
        return np.stack([gft(self.basis_, row) for row in signals])

    def inverse_transform(self, X):
        check_is_fitted(self, "basis_")
        coeffs = check_signal_matrix(X, self.n_vertices_)
        return np.stack([igft(self.basis_, row) for row in coeffs])


class GraphTranslation(BaseEstimator, TransformerMixin):
    """Transformer applying the translation operator at one vertex.

    Parameters
    ----------
    vertex : int, default=0
        Target vertex of the translation.
    """

    def __init__(self, vertex: int = 0):
        self.vertex = vertex

    def fit(self, X, y=None):
        graph = as_graph(X)
        if not 0 <= self.vertex < graph.n:
            raise ValueError(f"vertex {self.vertex} out of range for {graph.n} vertices")
        self.basis_ = eigendecompose(graph)
        self.n_vertices_ = graph.n
        return self

    def transform(self, X):
        check_is_fitted(self, "basis_")
        signals = check_signal_matrix(X, self.n_vertices_)
        return np.stack([translate(self.basis_, self.vertex, row) for row in signals])


class FiedlerPartition(BaseEstimator):
    """Sign partition of the fitted graph's second Laplacian eigenvector.

    Behaves like a clustering estimator: after ``fit`` the vertices carry
    labels +1 / -1 / 0 for the positive, negative, and zero sides.

    Parameters
    ----------
    zero_tol : float or None, default=None
        Zero-band threshold; None uses the scaled default.

    Attributes
    ----------
    labels_ : ndarray of shape (n_vertices,)
    fiedler_vector_ : ndarray of shape (n_vertices,)
    algebraic_connectivity_ : float
    multiplicity_ : int
        Multiplicity of the second eigenvalue; above one the labels depend
        on the deterministic basis convention.
    """

    def __init__(self, zero_tol: Optional[float] = None):
        self.zero_tol = zero_tol

    def fit(self, X, y=None):
        graph = as_graph(X)
        basis = eigendecompose(graph)
        vec, mult = fiedler(basis)
        tol = self.zero_tol if self.zero_tol is not None else default_partition_tol(vec)
        part = partition(vec, tol)
        labels = np.zeros(graph.n, dtype=int)
        labels[list(part.positive)] = 1
        labels[list(part.negative)] = -1
        self.basis_ = basis
        self.fiedler_vector_ = vec
        self.algebraic_connectivity_ = float(basis.eigenvalues[1])
        self.multiplicity_ = mult
        self.partition_ = part
        self.labels_ = labels
        return self

    def fit_predict(self, X, y=None):
        return self.fit(X, y).labels_
