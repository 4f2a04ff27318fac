"""Laplacian eigendecomposition with a fixed, reproducible basis convention.

An orthonormal eigenbasis of a Laplacian is only determined up to sign
flips and, inside degenerate eigenvalue clusters, up to rotation.  Since
every operator downstream (Fourier transform, translation, partition
analysis) is defined relative to one fixed basis, this module pins the
choice down:

* eigenvalues ascending (LAPACK order);
* inside each near-degenerate cluster, the basis is rebuilt from the
  cluster's orthogonal projector by norm-pivoted Gram-Schmidt, which
  depends only on the eigenspace, not on what the solver happened to
  return;
* each eigenvector's first entry of magnitude above ``SIGN_TOL`` is made
  positive.

The result is bit-reproducible: equal graphs give byte-identical bases.

Numeric tolerances used across the library live here as named constants.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import hadamard as _sylvester_hadamard

from .graphs import Graph
from .generators import complete, cycle

__all__ = [
    "ORTHONORMALITY_TOL",
    "RESIDUAL_RTOL",
    "DEGENERACY_GAP_RTOL",
    "SIGN_TOL",
    "EIGENVALUE_FLOOR",
    "ZERO_TOL_SCALE",
    "EigenBasis",
    "eigendecompose",
    "dft_basis",
    "sylvester_hadamard_basis",
    "is_hadamard_basis",
    "multiplicity",
    "BarrenSpectrum",
    "barren_cubic_roots",
    "barren_closed_spectrum",
]

# Tolerance knobs, all in one place.
ORTHONORMALITY_TOL = 1e-10   # max |Phi* Phi - I| allowed in a basis
RESIDUAL_RTOL = 1e-9         # ||L phi - lambda phi|| <= RESIDUAL_RTOL * max(1, lambda)
DEGENERACY_GAP_RTOL = 1e-8   # relative gap below which eigenvalues form one cluster
SIGN_TOL = 1e-8              # entry magnitude that anchors the sign convention
EIGENVALUE_FLOOR = -1e-10    # most negative eigenvalue tolerated (PSD up to roundoff)
ZERO_TOL_SCALE = 1e-8        # scale for default "is this entry zero" tests


@dataclass(frozen=True)
class EigenBasis:
    """A fixed orthonormal basis with its eigenvalues, optionally tied to a graph.

    ``vectors`` holds the basis column-wise: column k is the eigenvector
    paired with ``eigenvalues[k]``.  Construction validates orthonormality,
    the ascending eigenvalue order, and (when ``source_graph`` is given)
    the eigen-residuals against that graph's Laplacian.
    """

    eigenvalues: np.ndarray
    vectors: np.ndarray
    source_graph: Optional[Graph] = field(default=None)

    def __post_init__(self):
        evals = np.asarray(self.eigenvalues, dtype=float).copy()
        vecs = np.asarray(self.vectors).copy()
        if np.iscomplexobj(vecs):
            vecs = vecs.astype(np.complex128)
        else:
            vecs = vecs.astype(np.float64)
        n = vecs.shape[0]
        if vecs.shape != (n, n) or evals.shape != (n,):
            raise ValueError(f"basis needs square vectors and matching eigenvalues, got {vecs.shape} / {evals.shape}")
        if n == 0:
            raise ValueError("empty basis")
        if np.any(np.diff(evals) < -1e-12):
            raise ValueError("eigenvalues must be sorted ascending")
        if evals[0] < EIGENVALUE_FLOOR:
            raise ValueError(f"eigenvalue {evals[0]} below PSD floor {EIGENVALUE_FLOOR}")
        gram = vecs.conj().T @ vecs
        err = np.max(np.abs(gram - np.eye(n)))
        if err > ORTHONORMALITY_TOL:
            raise ValueError(f"columns not orthonormal: max deviation {err:.3e}")
        if self.source_graph is not None:
            if self.source_graph.n != n:
                raise ValueError("source graph size does not match basis dimension")
            lap = self.source_graph.laplacian()
            resid = lap @ vecs - vecs * evals
            norms = np.linalg.norm(resid, axis=0)
            bound = RESIDUAL_RTOL * np.maximum(1.0, evals)
            if np.any(norms > bound):
                k = int(np.argmax(norms - bound))
                raise ValueError(f"eigen-residual {norms[k]:.3e} at index {k} exceeds bound {bound[k]:.3e}")
        evals.setflags(write=False)
        vecs.setflags(write=False)
        object.__setattr__(self, "eigenvalues", evals)
        object.__setattr__(self, "vectors", vecs)

    @property
    def n(self) -> int:
        return self.vectors.shape[0]

    @property
    def field_kind(self) -> str:
        return "complex" if np.iscomplexobj(self.vectors) else "real"

    def vector(self, k: int) -> np.ndarray:
        return self.vectors[:, k]


def _canonical_subspace_basis(block: np.ndarray) -> np.ndarray:
    """Deterministic orthonormal basis of span(block) via projector pivoting.

    The orthogonal projector P = block block* depends only on the subspace,
    so Gram-Schmidt on P's columns, always pivoting to the column with the
    largest remaining norm (ties to the lowest index), yields the same
    basis no matter which spanning vectors the eigensolver produced.
    """
    n, d = block.shape
    proj = block @ block.conj().T
    resid = proj.copy()
    cols = []
    for _ in range(d):
        norms = np.linalg.norm(resid, axis=0)
        j = int(np.argmax(norms))
        q = resid[:, j] / norms[j]
        # second orthogonalization pass for numerical safety
        for prev in cols:
            q = q - prev * (prev.conj() @ q)
        q = q / np.linalg.norm(q)
        cols.append(q)
        resid = resid - np.outer(q, q.conj() @ resid)
    return np.column_stack(cols)


def _fix_signs(vecs: np.ndarray) -> np.ndarray:
    out = vecs.copy()
    for k in range(out.shape[1]):
        col = out[:, k]
        big = np.nonzero(np.abs(col) > SIGN_TOL)[0]
        anchor = big[0] if big.size else int(np.argmax(np.abs(col)))
        if np.real(col[anchor]) < 0:
            out[:, k] = -col
    return out


def eigendecompose(g: Graph) -> EigenBasis:
    """Eigendecompose the Laplacian of ``g`` under the fixed basis convention.

    Repeated calls on equal graphs return byte-identical bases.
    """
    if g.n < 1:
        raise ValueError("eigendecompose requires at least one vertex")
    lap = g.laplacian()
    evals, vecs = np.linalg.eigh(lap)
    scale = max(1.0, float(abs(evals[-1])))
    gap = DEGENERACY_GAP_RTOL * scale
    # resolve degenerate clusters to a canonical basis
    start = 0
    for k in range(1, g.n + 1):
        if k == g.n or evals[k] - evals[k - 1] > gap:
            if k - start > 1:
                vecs[:, start:k] = _canonical_subspace_basis(vecs[:, start:k])
            start = k
    vecs = _fix_signs(vecs)
    return EigenBasis(eigenvalues=evals, vectors=vecs, source_graph=g)


def dft_basis(n: int) -> EigenBasis:
    """Unitary discrete-Fourier basis, an eigenbasis for the cycle on n vertices.

    Column k (before sorting) is phi_k(j) = exp(-2*pi*i*j*k/n) / sqrt(n)
    with eigenvalue 2 - 2*cos(2*pi*k/n); columns are then stably reordered
    so eigenvalues ascend while keeping their eigenvector pairing.
    """
    if n < 3:
        raise ValueError("dft_basis requires n >= 3")
    j, k = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    vecs = np.exp(-2j * np.pi * j * k / n) / math.sqrt(n)
    evals = 2.0 - 2.0 * np.cos(2.0 * np.pi * np.arange(n) / n)
    order = np.argsort(evals, kind="stable")
    return EigenBasis(eigenvalues=evals[order], vectors=vecs[:, order], source_graph=cycle(n))


def sylvester_hadamard_basis(k: int) -> EigenBasis:
    """Real constant-amplitude eigenbasis for the complete graph on 2**k vertices.

    Scales the order-2**k Sylvester Hadamard matrix by 1/sqrt(N); the
    all-ones column carries eigenvalue 0 and every other column carries N.
    """
    if k < 1:
        raise ValueError("sylvester_hadamard_basis requires k >= 1")
    n = 2 ** k
    vecs = _sylvester_hadamard(n).astype(float) / math.sqrt(n)
    evals = np.full(n, float(n))
    evals[0] = 0.0
    return EigenBasis(eigenvalues=evals, vectors=vecs, source_graph=complete(n))


def is_hadamard_basis(basis: EigenBasis, tol: float = 1e-8) -> bool:
    """True when every basis entry has magnitude 1/sqrt(N) within ``tol``."""
    target = 1.0 / math.sqrt(basis.n)
    return bool(np.max(np.abs(np.abs(basis.vectors) - target)) <= tol)


def multiplicity(basis: EigenBasis, value: float, tol: float = 1e-8) -> int:
    """Number of eigenvalues within ``tol`` of ``value``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    return int(np.sum(np.abs(basis.eigenvalues - value) <= tol))


# --- closed-form spectrum of the barren family -----------------------------


def _cubic_coefficients(n: int) -> tuple[float, float, float]:
    # monic cubic x^3 + c2 x^2 + c1 x + c0 tied to barren(n)
    return (-2.0 * n - 8.0, float(n * n + 10 * n + 15), -2.0 * n * n - 14.0 * n)


def cubic_discriminant(c2: float, c1: float, c0: float) -> float:
    """Discriminant of the monic cubic x^3 + c2 x^2 + c1 x + c0."""
    return (
        18.0 * c0 * c1 * c2
        - 4.0 * c2 ** 3 * c0
        + c2 ** 2 * c1 ** 2
        - 4.0 * c1 ** 3
        - 27.0 * c0 ** 2
    )


def barren_cubic_roots(n: int) -> tuple[float, float, float]:
    """The three real roots, ascending, of the barren graph's interior cubic.

    Solved with the trigonometric formula for three-real-root cubics, then
    polished with one Newton step per root.  A non-positive discriminant
    indicates an arithmetic bug (it is provably positive for n >= 3) and
    raises ArithmeticError.
    """
    if n < 3:
        raise ValueError("barren cubic requires N >= 3")
    c2, c1, c0 = _cubic_coefficients(n)
    if cubic_discriminant(c2, c1, c0) <= 0.0:
        raise ArithmeticError("cubic discriminant not positive; expected three distinct real roots")
    # depressed cubic t^3 + p t + q with x = t - c2/3
    p = c1 - c2 * c2 / 3.0
    q = 2.0 * c2 ** 3 / 27.0 - c2 * c1 / 3.0 + c0
    radius = 2.0 * math.sqrt(-p / 3.0)
    arg = 3.0 * q / (p * radius)
    theta = math.acos(min(1.0, max(-1.0, arg)))
    roots = sorted(
        radius * math.cos((theta - 2.0 * math.pi * k) / 3.0) - c2 / 3.0 for k in range(3)
    )

    def polish(x: float) -> float:
        px = ((x + c2) * x + c1) * x + c0
        dpx = (3.0 * x + 2.0 * c2) * x + c1
        return x - px / dpx

    y1, y2, y3 = (polish(x) for x in roots)
    return y1, y2, y3


@dataclass(frozen=True)
class BarrenSpectrum:
    """Closed-form Laplacian spectrum of barren(N) as a value/multiplicity multiset."""

    size_param: int
    lambda_low: float
    lambda_high: float
    y1: float
    y2: float
    y3: float
    multiset: tuple[tuple[float, int], ...]

    def expand(self) -> np.ndarray:
        """All N + 7 eigenvalues, sorted ascending with multiplicity."""
        values = []
        for value, mult in self.multiset:
            values.extend([value] * mult)
        return np.sort(np.array(values))


def barren_closed_spectrum(n: int) -> BarrenSpectrum:
    """Exact spectrum of barren(n): eight distinct values with multiplicities.

    The multiset is {0, lambda_low, y1, 5 (x N-1), y2, N+1 (x 2),
    lambda_high, y3} where lambda_{low,high} = (N+3 -/+ sqrt(N^2-2N+9))/2
    and y1 < y2 < y3 are the cubic roots.  Multiplicities sum to N + 7.
    """
    if n < 3:
        raise ValueError("barren requires N >= 3")
    root = math.sqrt(n * n - 2.0 * n + 9.0)
    lam_low = (n + 3.0 - root) / 2.0
    lam_high = (n + 3.0 + root) / 2.0
    y1, y2, y3 = barren_cubic_roots(n)
    multiset = tuple(
        sorted(
            [
                (0.0, 1),
                (lam_low, 1),
                (y1, 1),
                (5.0, n - 1),
                (y2, 1),
                (float(n + 1), 2),
                (lam_high, 1),
                (y3, 1),
            ]
        )
    )
    return BarrenSpectrum(
        size_param=n,
        lambda_low=lam_low,
        lambda_high=lam_high,
        y1=y1,
        y2=y2,
        y3=y3,
        multiset=multiset,
    )
