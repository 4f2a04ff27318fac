"""Fourier transform, convolution, modulation, and translation on graph signals.

All operators are defined relative to one fixed :class:`~vertexfreq.spectral.EigenBasis`.
Signals are plain length-N numpy vectors; spectral signals are vectors of
expansion coefficients indexed like the eigenvalues.

Unlike its classical counterpart, the translation operator to vertex i is
not an isometry and can be singular: it drops rank exactly at the basis
vectors that vanish on vertex i.  :func:`translation_analysis` reports that
structure, :func:`translation_inverse` builds the explicit inverse when it
exists, and :func:`semigroup_table` detects the constant-amplitude bases
whose translations compose like a semigroup.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .spectral import EigenBasis, ZERO_TOL_SCALE

__all__ = [
    "NotInvertibleError",
    "NonInvertibleSymbolError",
    "TranslationAnalysis",
    "FailureWitness",
    "TranslationNormBounds",
    "default_zero_tol",
    "gft",
    "igft",
    "convolve",
    "modulate",
    "translate",
    "translation_matrix",
    "translation_analysis",
    "translation_inverse",
    "apply_multiplier",
    "invert_multiplier",
    "translation_symbol",
    "semigroup_table",
    "translation_composition_check",
    "translation_norm_report",
]


class NotInvertibleError(ValueError):
    """Translation at this vertex is singular: some basis vectors vanish there."""

    def __init__(self, vertex: int, vanishing_indices: Sequence[int]):
        self.vertex = int(vertex)
        self.vanishing_indices = tuple(int(k) for k in vanishing_indices)
        super().__init__(
            f"translation at vertex {self.vertex} is not invertible; "
            f"basis vectors {list(self.vanishing_indices)} vanish there"
        )


class NonInvertibleSymbolError(ValueError):
    """A Fourier multiplier symbol has (near-)zero entries and cannot be inverted."""

    def __init__(self, indices: Sequence[int]):
        self.indices = tuple(int(k) for k in indices)
        super().__init__(f"multiplier symbol vanishes at spectral indices {list(self.indices)}")


def default_zero_tol(basis: EigenBasis) -> float:
    """Default threshold for treating a basis entry as zero."""
    return ZERO_TOL_SCALE * math.sqrt(basis.n)


def _check_signal(basis: EigenBasis, f: Sequence[complex]) -> np.ndarray:
    arr = np.asarray(f)
    if arr.shape != (basis.n,):
        raise ValueError(f"signal has shape {arr.shape}, expected ({basis.n},)")
    return arr


def _check_vertex(basis: EigenBasis, i: int) -> int:
    i = int(i)
    if not 0 <= i < basis.n:
        raise IndexError(f"vertex {i} out of range for dimension {basis.n}")
    return i


def gft(basis: EigenBasis, f: Sequence[complex]) -> np.ndarray:
    """Forward transform: coefficient k is the inner product of f with basis vector k."""
    f = _check_signal(basis, f)
    return basis.vectors.conj().T @ f


def igft(basis: EigenBasis, coeffs: Sequence[complex]) -> np.ndarray:
    """Inverse transform: resynthesize the vertex signal from its coefficients."""
    coeffs = _check_signal(basis, coeffs)
    return basis.vectors @ coeffs


def convolve(basis: EigenBasis, f: Sequence[complex], g: Sequence[complex]) -> np.ndarray:
    """Spectral-domain product: transform both, multiply coefficients, invert."""
    return igft(basis, gft(basis, f) * gft(basis, g))


def modulate(basis: EigenBasis, k: int, f: Sequence[complex]) -> np.ndarray:
    """Pointwise multiplication by sqrt(N) times basis vector k."""
    k = _check_vertex(basis, k)
    f = _check_signal(basis, f)
    return math.sqrt(basis.n) * f * basis.vectors[:, k]


def translate(basis: EigenBasis, i: int, f: Sequence[complex]) -> np.ndarray:
    """Translate signal f to vertex i.

    Computes sqrt(N) * sum_k fhat(k) * conj(phi_k(i)) * phi_k, i.e. the
    convolution of f with a unit impulse at vertex i, scaled by sqrt(N).
    """
    i = _check_vertex(basis, i)
    coeffs = gft(basis, f) * basis.vectors[i, :].conj()
    return math.sqrt(basis.n) * (basis.vectors @ coeffs)


def translation_matrix(basis: EigenBasis, i: int) -> np.ndarray:
    """Dense matrix of the translation operator at vertex i."""
    i = _check_vertex(basis, i)
    # column k of the synthesis factor is conj(phi_k(i)) * phi_k
    synth = basis.vectors * basis.vectors[i, :].conj()
    return math.sqrt(basis.n) * synth @ basis.vectors.conj().T


@dataclass(frozen=True)
class TranslationAnalysis:
    """Rank/null-space structure of one translation operator.

    ``vanishing_indices`` lists the basis vectors with |phi_k(i)| <= tol;
    they span the null space, so rank = N - len(vanishing_indices) and the
    operator is invertible iff the list is empty.  ``kappa`` (only for
    invertible operators) is 1 / (sqrt(N) * min_k |phi_k(i)|), the
    conditioning factor of the explicit inverse.
    """

    vertex: int
    rank: int
    vanishing_indices: tuple[int, ...]
    invertible: bool
    unitary: bool
    tol: float
    kappa: Optional[float] = None


def translation_analysis(basis: EigenBasis, i: int, tol: Optional[float] = None) -> TranslationAnalysis:
    """Classify the translation operator at vertex i at zero-threshold ``tol``."""
    i = _check_vertex(basis, i)
    if tol is None:
        tol = default_zero_tol(basis)
    if tol <= 0:
        raise ValueError("tol must be positive")
    amplitudes = np.abs(basis.vectors[i, :])
    vanishing = tuple(int(k) for k in np.nonzero(amplitudes <= tol)[0])
    invertible = not vanishing
    unitary = bool(np.max(np.abs(amplitudes - 1.0 / math.sqrt(basis.n))) <= tol)
    kappa = float(1.0 / (math.sqrt(basis.n) * amplitudes.min())) if invertible else None
    return TranslationAnalysis(
        vertex=i,
        rank=basis.n - len(vanishing),
        vanishing_indices=vanishing,
        invertible=invertible,
        unitary=unitary,
        tol=float(tol),
        kappa=kappa,
    )


def translation_inverse(basis: EigenBasis, i: int, tol: Optional[float] = None) -> np.ndarray:
    """Explicit inverse of the translation at vertex i.

    Valid only when no basis vector vanishes at i; otherwise raises
    :class:`NotInvertibleError` naming the vanishing indices.  The entries
    divide by phi_k(i), so accuracy degrades like the reported kappa.
    """
    analysis = translation_analysis(basis, i, tol)
    if not analysis.invertible:
        raise NotInvertibleError(i, analysis.vanishing_indices)
    # row k of the analysis factor is conj(phi_k) / conj(phi_k(i))
    inv_factor = (basis.vectors.conj() / basis.vectors[i, :].conj()).T
    return basis.vectors @ inv_factor / math.sqrt(basis.n)


def apply_multiplier(basis: EigenBasis, symbol: Sequence[complex], f: Sequence[complex]) -> np.ndarray:
    """Apply the Fourier multiplier with the given spectral symbol to f."""
    symbol = _check_signal(basis, symbol)
    return igft(basis, symbol * gft(basis, f))


def invert_multiplier(symbol: Sequence[complex], tol: float = 1e-12) -> np.ndarray:
    """Entrywise reciprocal of a multiplier symbol.

    Raises :class:`NonInvertibleSymbolError` listing every index whose
    magnitude is at most ``tol``.
    """
    symbol = np.asarray(symbol)
    dead = np.nonzero(np.abs(symbol) <= tol)[0]
    if dead.size:
        raise NonInvertibleSymbolError(dead)
    return 1.0 / symbol


def translation_symbol(basis: EigenBasis, i: int) -> np.ndarray:
    """Spectral symbol sqrt(N) * conj(phi_k(i)) whose multiplier is translation to i."""
    i = _check_vertex(basis, i)
    return math.sqrt(basis.n) * basis.vectors[i, :].conj()


@dataclass(frozen=True)
class FailureWitness:
    """Evidence that no semigroup table exists for a basis.

    ``pair`` is the offending vertex pair (i, j); ``product`` is the
    spectral product vector sqrt(N) * phi_k(i) * phi_k(j) that matched no
    vertex row of the basis.
    """

    pair: tuple[int, int]
    product: np.ndarray


def semigroup_table(basis: EigenBasis, tol: float = 1e-8):
    """Search for a composition table for the translation operators.

    Translations compose as T_i T_j = T_(i*j) exactly when, for every
    eigenvector index k, sqrt(N) * phi_k(i) * phi_k(j) equals phi_k(i*j).
    For each vertex pair this scans all candidate vertices; on success the
    full N x N integer table is returned, otherwise a
    :class:`FailureWitness` for the first unresolvable pair.
    """
    n = basis.n
    rows = basis.vectors  # rows[v, k] = phi_k(v)
    scale = math.sqrt(n)
    table = np.zeros((n, n), dtype=int)
    for i in range(n):
        for j in range(n):
            product = scale * rows[i, :] * rows[j, :]
            mismatch = np.max(np.abs(product[np.newaxis, :] - rows), axis=1)
            best = int(np.argmin(mismatch))
            if mismatch[best] > tol:
                return FailureWitness(pair=(i, j), product=product)
            table[i, j] = best
    return table


def translation_composition_check(
    basis: EigenBasis,
    alpha: Sequence[int],
    alpha0: int,
    f: Sequence[float],
    permutation: Sequence[int],
    tol: float = 1e-9,
) -> bool:
    """Check invariance of composed translations under reshuffling.

    Applies translations at alpha[0], ..., alpha[-1] in order and reads the
    result at alpha0; then does the same for the permuted tuple
    (alpha0, *alpha)[permutation] and compares.  Requires a real basis
    (the identity fails for genuinely complex ones).
    """
    if basis.field_kind != "real":
        raise ValueError("composition check requires a real-valued basis")
    indices = [
        _check_vertex(basis, alpha0),
        *(_check_vertex(basis, a) for a in alpha),
    ]
    if sorted(permutation) != list(range(len(indices))):
        raise ValueError("permutation must reorder all of (alpha0, *alpha)")
    f = np.asarray(f, dtype=float)

    def evaluate(seq: list[int]) -> float:
        out = f
        for v in seq[1:]:
            out = translate(basis, v, out)
        return float(out[seq[0]])

    permuted = [indices[p] for p in permutation]
    return abs(evaluate(indices) - evaluate(permuted)) <= tol


@dataclass(frozen=True)
class TranslationNormBounds:
    """The two-sided norm estimate for one translated signal."""

    lower: float
    value: float
    upper_local: float
    upper_global: float


def translation_norm_report(basis: EigenBasis, i: int, f: Sequence[complex]) -> TranslationNormBounds:
    """Norm of the translated signal with its lower and upper estimates.

    lower = |fhat(0)|, value = ||T_i f||, upper_local scales ||f|| by
    sqrt(N) max_k |phi_k(i)|, upper_global by sqrt(N) max_k ||phi_k||_inf.
    The chain lower <= value <= upper_local <= upper_global is asserted to
    1e-10 slack; it presumes the constant eigenvector (connected graph).
    """
    i = _check_vertex(basis, i)
    f = _check_signal(basis, f)
    coeffs = gft(basis, f)
    lower = float(abs(coeffs[0]))
    value = float(np.linalg.norm(translate(basis, i, f)))
    fnorm = float(np.linalg.norm(f))
    scale = math.sqrt(basis.n)
    upper_local = scale * float(np.max(np.abs(basis.vectors[i, :]))) * fnorm
    upper_global = scale * float(np.max(np.abs(basis.vectors))) * fnorm
    slack = 1e-10
    if not (lower <= value + slack and value <= upper_local + slack and upper_local <= upper_global + slack):
        raise ValueError(
            f"norm estimate chain violated: {lower} <= {value} <= {upper_local} <= {upper_global}"
        )
    return TranslationNormBounds(lower=lower, value=value, upper_local=upper_local, upper_global=upper_global)
