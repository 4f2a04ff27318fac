"""Sign structure of Laplacian eigenvectors and where they vanish.

The second-smallest Laplacian eigenvalue of a connected graph measures its
algebraic connectivity; the corresponding eigenvector splits the vertices
into a positive side, a negative side, and the zero set.  This module
extracts that partition, scans the zero set for radius-1 balls (large ones
are impossible on planar graphs but the barren family produces them at any
size), verifies the barren family against its closed-form spectrum, and
builds new eigenpairs by gluing graphs along zero vertices or extending
subgraph eigenvectors by zero.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import generators
from .graphs import (
    Graph,
    add_edges,
    ball,
    connected_components,
    disjoint_union,
    induced_subgraph,
    set_distance,
)
from .spectral import (
    DEGENERACY_GAP_RTOL,
    RESIDUAL_RTOL,
    ZERO_TOL_SCALE,
    EigenBasis,
    barren_closed_spectrum,
    eigendecompose,
    multiplicity,
)

__all__ = [
    "VertexPartition",
    "CharacteristicReport",
    "LiftResult",
    "BarrenVerification",
    "HarnessInstance",
    "HarnessReport",
    "fiedler",
    "default_partition_tol",
    "partition",
    "partition_distance_check",
    "sign_connectivity_check",
    "zero_ball_scan",
    "constant_ball_scan",
    "verify_barren",
    "lift_common_eigenvector",
    "extend_subgraph_eigenvector",
    "planar_family_harness",
    "HARNESS_FAMILIES",
]


def fiedler(basis: EigenBasis, tol: float = 1e-8) -> tuple[np.ndarray, int]:
    """Second eigenvector of a connected graph's Laplacian, with its multiplicity.

    Raises for graphs that are disconnected at tolerance ``tol`` (their
    second eigenvalue is still zero).  A multiplicity above one means the
    eigenvector, and hence its zero set, depends on the fixed basis
    convention rather than on the graph alone.
    """
    if basis.n < 2:
        raise ValueError("fiedler vector needs at least two vertices")
    lam1 = float(basis.eigenvalues[1])
    if lam1 <= tol:
        raise ValueError(f"second eigenvalue {lam1:.3e} is zero at tol {tol:.1e}: graph is disconnected")
    cluster_tol = DEGENERACY_GAP_RTOL * max(1.0, float(basis.eigenvalues[-1]))
    mult = multiplicity(basis, lam1, cluster_tol)
    return np.asarray(basis.vectors[:, 1]), mult


def default_partition_tol(f: Sequence[float]) -> float:
    """Zero threshold scaled to the signal's largest magnitude."""
    arr = np.asarray(f)
    return ZERO_TOL_SCALE * float(np.max(np.abs(arr))) if arr.size else 0.0


@dataclass(frozen=True)
class VertexPartition:
    """Sign partition of a real signal: positive, negative, and zero vertices."""

    positive: tuple[int, ...]
    negative: tuple[int, ...]
    zero: tuple[int, ...]
    tol: float

    @property
    def n(self) -> int:
        return len(self.positive) + len(self.negative) + len(self.zero)


def partition(f: Sequence[float], tol: Optional[float] = None) -> VertexPartition:
    """Split vertices by sign of ``f`` with zero band ``|f| <= tol``."""
    f = np.asarray(f, dtype=float)
    if tol is None:
        tol = default_partition_tol(f)
    if tol < 0:
        raise ValueError("tol must be non-negative")
    pos = tuple(int(i) for i in np.nonzero(f > tol)[0])
    neg = tuple(int(i) for i in np.nonzero(f < -tol)[0])
    zero = tuple(int(i) for i in np.nonzero(np.abs(f) <= tol)[0])
    return VertexPartition(positive=pos, negative=neg, zero=zero, tol=float(tol))


def partition_distance_check(g: Graph, p: VertexPartition) -> float:
    """Distance between the positive and negative sides.

    For a genuine second-eigenvector partition of a connected graph this
    is at most 2: either the sides touch, or they meet across a zero
    vertex whose neighborhood must carry both signs.
    """
    if not p.positive or not p.negative:
        raise ValueError("distance check requires nonempty positive and negative sides")
    return set_distance(g, p.positive, p.negative)


def _induced_connected(g: Graph, vertices: Sequence[int]) -> bool:
    if not vertices:
        return True
    sub = induced_subgraph(g, sorted(vertices))
    return len(connected_components(sub)) <= 1


def sign_connectivity_check(g: Graph, p: VertexPartition) -> tuple[bool, bool]:
    """Whether the induced subgraphs on the positive and negative sides connect."""
    return _induced_connected(g, p.positive), _induced_connected(g, p.negative)


@dataclass(frozen=True)
class CharacteristicReport:
    """Radius-1 balls lying entirely inside a signal's zero set."""

    zero_set: tuple[int, ...]
    contained_balls: tuple[tuple[int, tuple[int, ...]], ...]
    max_ball_size: int


def zero_ball_scan(g: Graph, p: VertexPartition) -> CharacteristicReport:
    """Find every zero vertex whose closed neighborhood is also zero."""
    zero = set(p.zero)
    contained = []
    for x in p.zero:
        b = ball(g, x, 1)
        if set(b) <= zero:
            contained.append((x, b))
    max_size = max((len(b) for _, b in contained), default=0)
    return CharacteristicReport(
        zero_set=tuple(p.zero),
        contained_balls=tuple(contained),
        max_ball_size=max_size,
    )


def constant_ball_scan(
    g: Graph, f: Sequence[float], p: VertexPartition, tol: float = 1e-10
) -> list[int]:
    """Centers of signed radius-1 balls on which ``f`` is constant within ``tol``.

    A genuine eigenvector for a positive eigenvalue can never be constant
    on a ball inside its positive or negative side, so the expected result
    is an empty list; entries are counterexamples.
    """
    f = np.asarray(f, dtype=float)
    pos, neg = set(p.positive), set(p.negative)
    violations = []
    for side in (pos, neg):
        for x in sorted(side):
            b = ball(g, x, 1)
            if set(b) <= side:
                values = f[list(b)]
                if float(values.max() - values.min()) < tol:
                    violations.append(x)
    return sorted(violations)


@dataclass(frozen=True)
class BarrenVerification:
    """Outcome of checking one barren graph against its closed-form structure."""

    size_param: int
    spectrum_ok: bool
    support_ok: bool
    zero_set_ok: bool
    shape_ok: bool
    eigenvalues: tuple[float, ...]
    expected: tuple[float, ...]
    lambda1: float
    y1: float
    support: tuple[int, ...]
    a: float
    b: float
    diagnostics: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return self.spectrum_ok and self.support_ok and self.zero_set_ok and self.shape_ok


def verify_barren(n: int, tol: float = 1e-8) -> BarrenVerification:
    """Check barren(n) end to end: spectrum, Fiedler support, zero set, value shape.

    All four checks are reported rather than raised, so a failure comes
    back as a structured diagnostic.
    """
    if n < 3:
        raise ValueError("barren requires N >= 3")
    g, layout = generators.barren(n)
    basis = eigendecompose(g)
    closed = barren_closed_spectrum(n)
    diagnostics = []

    expected = closed.expand()
    got = np.asarray(basis.eigenvalues)
    spectrum_ok = got.shape == expected.shape and bool(np.max(np.abs(got - expected)) <= tol)
    if not spectrum_ok:
        diagnostics.append(f"spectrum mismatch: max deviation {np.max(np.abs(got - expected)):.3e}")

    vec, mult = fiedler(basis)
    if mult != 1:
        diagnostics.append(f"second eigenvalue unexpectedly degenerate (multiplicity {mult})")
    support = tuple(int(i) for i in np.nonzero(np.abs(vec) > 1e-6)[0])
    expected_support = tuple(sorted(layout.v3 + layout.v4 + layout.v5 + layout.v6))
    support_ok = support == expected_support
    if not support_ok:
        diagnostics.append(f"support is {support}, expected {expected_support}")

    part = partition(vec)
    zero_set_ok = tuple(part.zero) == tuple(sorted(layout.v1 + layout.v2))
    if not zero_set_ok:
        diagnostics.append(f"zero set is {part.zero}")

    a = float(vec[layout.v3[0]])
    b = float(vec[layout.v5[0]])
    shape_ok = (
        all(abs(float(vec[v]) - a) <= tol for v in layout.v3)
        and all(abs(float(vec[v]) + a) <= tol for v in layout.v4)
        and all(abs(float(vec[v]) - b) <= tol for v in layout.v5)
        and all(abs(float(vec[v]) + b) <= tol for v in layout.v6)
        and a * b > 0
        and abs(4.0 * a * a + 2.0 * b * b - 1.0) <= 1e-9
    )
    if not shape_ok:
        diagnostics.append(f"value shape failed: a={a}, b={b}, 4a^2+2b^2={4 * a * a + 2 * b * b}")

    return BarrenVerification(
        size_param=n,
        spectrum_ok=spectrum_ok,
        support_ok=support_ok,
        zero_set_ok=zero_set_ok,
        shape_ok=shape_ok,
        eigenvalues=tuple(float(v) for v in got),
        expected=tuple(float(v) for v in expected),
        lambda1=float(basis.eigenvalues[1]),
        y1=closed.y1,
        support=support,
        a=a,
        b=b,
        diagnostics=tuple(diagnostics),
    )


@dataclass(frozen=True)
class LiftResult:
    """An eigenpair of a composite graph, with its verified residual."""

    graph: Graph
    eigenvalue: float
    eigenvector: np.ndarray
    residual: float


def _eigen_residual(g: Graph, lam: float, vec: np.ndarray) -> float:
    return float(np.linalg.norm(g.laplacian() @ vec - lam * vec))


def _check_eigenpair(g: Graph, lam: float, vec: np.ndarray, what: str) -> None:
    resid = _eigen_residual(g, lam, vec)
    bound = RESIDUAL_RTOL * max(1.0, lam)
    if resid > bound:
        raise ValueError(f"{what}: eigen-residual {resid:.3e} exceeds {bound:.3e}")


def lift_common_eigenvector(
    components: Sequence[tuple[Graph, float, Sequence[float]]],
    connecting_edges: Sequence[tuple[tuple[int, int], tuple[int, int]]],
    tol: float = 1e-8,
) -> LiftResult:
    """Glue eigenvectors of several graphs into one eigenvector of their union.

    Each component is (graph, eigenvalue, eigenvector) sharing one
    eigenvalue; connecting edges are ((j, u), (l, v)) pairs in
    component-local indices, and every endpoint must sit where its
    component's eigenvector vanishes (within ``tol``).  The concatenated
    vector is then an eigenvector of the disjoint union plus connectors,
    which is verified before returning.
    """
    if len(components) < 2:
        raise ValueError("lift requires at least two components")
    if not connecting_edges:
        raise ValueError("lift requires a nonempty connecting edge set")
    lam = float(components[0][1])
    if lam <= 0:
        raise ValueError("lift requires a positive shared eigenvalue")
    offsets = []
    union: Optional[Graph] = None
    vectors = []
    for idx, (g, lam_j, vec) in enumerate(components):
        vec = np.asarray(vec, dtype=float)
        if vec.shape != (g.n,):
            raise ValueError(f"component {idx}: eigenvector has shape {vec.shape}, expected ({g.n},)")
        if abs(float(lam_j) - lam) > 1e-9 * max(1.0, lam):
            raise ValueError(f"component {idx}: eigenvalue {lam_j} differs from shared value {lam}")
        _check_eigenpair(g, lam, vec, f"component {idx}")
        offsets.append(union.n if union is not None else 0)
        union = g if union is None else disjoint_union(union, g)
        vectors.append(vec)

    new_edges = []
    for (j, u), (l, v) in connecting_edges:
        if j == l:
            raise ValueError(f"connecting edge ({j},{u})-({l},{v}) must join different components")
        for comp, vert in ((j, u), (l, v)):
            if not 0 <= comp < len(components):
                raise ValueError(f"component index {comp} out of range")
            value = float(vectors[comp][components[comp][0].check_vertex(vert)])
            if abs(value) > tol:
                raise ValueError(
                    f"connecting endpoint (component {comp}, vertex {vert}) has nonzero value {value:.3e}"
                )
        new_edges.append((offsets[j] + u, offsets[l] + v))

    lifted_graph = add_edges(union, new_edges)
    lifted_vec = np.concatenate(vectors)
    residual = _eigen_residual(lifted_graph, lam, lifted_vec)
    _check_eigenpair(lifted_graph, lam, lifted_vec, "lifted vector")
    return LiftResult(graph=lifted_graph, eigenvalue=lam, eigenvector=lifted_vec, residual=residual)


def extend_subgraph_eigenvector(
    g: Graph,
    subset: Sequence[int],
    lam: float,
    vec: Sequence[float],
    tol: float = 1e-8,
) -> LiftResult:
    """Zero-extend an induced-subgraph eigenvector to the whole graph.

    ``vec`` must be an eigenvector of the induced subgraph on ``subset``
    (with degrees counted inside the subset only), and every edge leaving
    the subset must leave from a vertex where ``vec`` vanishes.  The
    extension by zero is then an eigenpair of ``g`` for the same
    eigenvalue, verified before returning.
    """
    subset = [g.check_vertex(v) for v in subset]
    if len(set(subset)) != len(subset):
        raise ValueError("subset vertices must be distinct")
    vec = np.asarray(vec, dtype=float)
    if vec.shape != (len(subset),):
        raise ValueError(f"eigenvector has shape {vec.shape}, expected ({len(subset)},)")
    lam = float(lam)
    sub = induced_subgraph(g, subset)
    _check_eigenpair(sub, lam, vec, "subgraph eigenpair")

    position = {v: i for i, v in enumerate(subset)}
    inside = set(subset)
    for u, v in g.edges:
        for s, t in ((u, v), (v, u)):
            if s in inside and t not in inside and abs(float(vec[position[s]])) > tol:
                raise ValueError(
                    f"boundary edge ({s}, {t}) leaves the subset at a vertex with nonzero value"
                )

    extended = np.zeros(g.n)
    extended[subset] = vec
    residual = _eigen_residual(g, lam, extended)
    _check_eigenpair(g, lam, extended, "extended vector")
    return LiftResult(graph=g, eigenvalue=lam, eigenvector=extended, residual=residual)


# --- planar-family sweep ----------------------------------------------------


@dataclass(frozen=True)
class HarnessInstance:
    """One graph of a family sweep with its zero-set ball statistics."""

    label: str
    n: int
    fiedler_multiplicity: int
    contained_ball_count: int
    max_ball_size: int


@dataclass(frozen=True)
class HarnessReport:
    """Zero-set ball sizes across a graph family.

    ``bound_satisfied`` records whether every instance kept its contained
    radius-1 balls at three or fewer vertices, the bound that planar
    graphs can never violate.
    """

    family: str
    instances: tuple[HarnessInstance, ...]
    max_ball_size: int
    bound_satisfied: bool


def _default_tree_params() -> list[tuple[int, int]]:
    return [(4 + (seed % 17), seed) for seed in range(100)]


HARNESS_FAMILIES = ("path", "cycle", "tree", "grid", "ladder", "barren")

_DEFAULT_PARAMS = {
    "path": lambda: list(range(2, 21)),
    "cycle": lambda: list(range(3, 21)),
    "tree": _default_tree_params,
    "grid": lambda: [(r, c) for r in range(2, 7) for c in range(r, 7)],
    "ladder": lambda: [(rungs, m) for rungs in (3, 5, 7) for m in range(2, 6)],
    "barren": lambda: list(range(3, 9)),
}


def _build_instance(family: str, param) -> tuple[str, Graph]:
    if family == "path":
        return f"path({param})", generators.path(param)
    if family == "cycle":
        return f"cycle({param})", generators.cycle(param)
    if family == "tree":
        n, seed = param
        return f"tree(n={n},seed={seed})", generators.random_tree(n, seed)
    if family == "grid":
        r, c = param
        return f"grid({r},{c})", generators.grid(r, c)
    if family == "ladder":
        rungs, m = param
        return f"ladder({rungs},{m})", generators.generalized_ladder(rungs, m)
    if family == "barren":
        return f"barren({param})", generators.barren(param)[0]
    raise ValueError(f"unknown family {family!r}; expected one of {HARNESS_FAMILIES}")


def _scan_instance(item: tuple[str, Graph], tol: Optional[float]) -> HarnessInstance:
    label, g = item
    basis = eigendecompose(g)
    vec, mult = fiedler(basis)
    p = partition(vec, tol)
    report = zero_ball_scan(g, p)
    return HarnessInstance(
        label=label,
        n=g.n,
        fiedler_multiplicity=mult,
        contained_ball_count=len(report.contained_balls),
        max_ball_size=report.max_ball_size,
    )


def planar_family_harness(
    family: str,
    params: Optional[Sequence] = None,
    tol: Optional[float] = None,
    max_workers: int = 1,
) -> HarnessReport:
    """Sweep a planar-by-construction family and report zero-set ball sizes.

    Families: paths, cycles, random trees, grids, generalized ladders,
    plus the barren family as the deliberately non-planar control.  No
    planarity test is run; the families are planar by how they are built.
    Instances may be evaluated by a small thread pool; results aggregate
    in parameter order either way.
    """
    if family not in HARNESS_FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {HARNESS_FAMILIES}")
    if params is None:
        params = _DEFAULT_PARAMS[family]()
    items = [_build_instance(family, p) for p in params]
    if max_workers > 1 and len(items) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            instances = list(pool.map(lambda it: _scan_instance(it, tol), items))
    else:
        instances = [_scan_instance(it, tol) for it in items]
    max_size = max((inst.max_ball_size for inst in instances), default=0)
    return HarnessReport(
        family=family,
        instances=tuple(instances),
        max_ball_size=max_size,
        bound_satisfied=max_size <= 3,
    )
