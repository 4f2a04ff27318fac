"""Input validation helpers shared by the estimator API."""

from __future__ import annotations

import numpy as np

from .graphs import Graph

__all__ = ["check_adjacency", "graph_from_adjacency", "as_graph", "check_signal_matrix"]


def check_adjacency(X) -> np.ndarray:
    """Validate a dense unweighted adjacency matrix and return it as float array.

    Requires a square symmetric 0/1 matrix with zero diagonal.
    """
    arr = np.asarray(X, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"adjacency matrix must be square, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise ValueError("adjacency matrix must be non-empty")
    if not np.allclose(arr, arr.T):
        raise ValueError("adjacency matrix must be symmetric")
    if np.any(np.diag(arr) != 0):
        raise ValueError("adjacency matrix must have a zero diagonal (no self-loops)")
    if not np.all((arr == 0) | (arr == 1)):
        raise ValueError("adjacency entries must be 0 or 1 (unweighted graphs only)")
    return arr


def graph_from_adjacency(X) -> Graph:
    arr = check_adjacency(X)
    rows, cols = np.nonzero(np.triu(arr, 1))
    return Graph(arr.shape[0], tuple(zip(rows.tolist(), cols.tolist())))


def as_graph(X) -> Graph:
    """Accept either a Graph or an adjacency matrix."""
    if isinstance(X, Graph):
        return X
    return graph_from_adjacency(X)


def check_signal_matrix(F, n: int) -> np.ndarray:
    """Coerce signals to a 2-D (n_signals, n) array; a single signal gets one row."""
    arr = np.asarray(F)
    if arr.ndim == 1:
        arr = arr[np.newaxis, :]
    if arr.ndim != 2 or arr.shape[1] != n:
        raise ValueError(f"expected signals of length {n}, got shape {np.asarray(F).shape}")
    return arr
