"""Deterministic constructors for the graph families used by the library.

Every generator maps equal parameters to identical edge sets.  The barren
family fixes an explicit vertex layout (see :class:`BarrenLayout`) so
callers and tests can address its six vertex classes by index.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .graphs import Graph

__all__ = [
    "path",
    "cycle",
    "complete",
    "star",
    "complete_bipartite",
    "grid",
    "generalized_ladder",
    "duplicated_middle_path",
    "random_tree",
    "BarrenLayout",
    "barren",
]


def path(n: int) -> Graph:
    """Path on n >= 1 vertices: 0 - 1 - ... - (n-1)."""
    if n < 1:
        raise ValueError("path requires n >= 1")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def complete(n: int) -> Graph:
    """Complete graph on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete requires n >= 1")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def complete_bipartite(m: int, n: int) -> Graph:
    """All edges between classes {0..m-1} and {m..m+n-1}."""
    if m < 1 or n < 1:
        raise ValueError("complete_bipartite requires m, n >= 1")
    return Graph(m + n, tuple((i, m + j) for i in range(m) for j in range(n)))


def star(n: int) -> Graph:
    """Star with n >= 1 leaves (indices 0..n-1) and hub at index n."""
    if n < 1:
        raise ValueError("star requires n >= 1")
    return complete_bipartite(n, 1)


def grid(rows: int, cols: int) -> Graph:
    """Rectangular grid (Cartesian product of two paths); planar by construction."""
    if rows < 1 or cols < 1:
        raise ValueError("grid requires rows, cols >= 1")

    def idx(r: int, c: int) -> int:
        return r * cols + c

    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((idx(r, c), idx(r, c + 1)))
            if r + 1 < rows:
                edges.append((idx(r, c), idx(r + 1, c)))
    return Graph(rows * cols, tuple(edges))


def generalized_ladder(n: int, m: int) -> Graph:
    """Ladder with n rungs of m vertices each.

    Vertex (j, i) has flat index j*m + i for rung j = 0..n-1 and position
    i = 0..m-1.  Each rung is a path; the two rung endpoints (positions 0
    and m-1) are joined to the neighboring rungs' endpoints, forming the
    two rails.  For m = 2 this is the ordinary ladder.
    """
    if n < 2 or m < 2:
        raise ValueError("generalized_ladder requires n >= 2 and m >= 2")
    edges = []
    for j in range(n):
        for i in range(m - 1):
            edges.append((j * m + i, j * m + i + 1))
    for j in range(n - 1):
        edges.append((j * m, (j + 1) * m))
        edges.append((j * m + m - 1, (j + 1) * m + m - 1))
    return Graph(n * m, tuple(edges))


def duplicated_middle_path(k: int, m: int) -> Graph:
    """Path of 2k+1 vertices whose middle vertex is cloned m times.

    Layout: left path 0..k-1, center copies k..k+m-1, right path
    k+m..2k+m-1.  Every center copy is adjacent to exactly the last left
    vertex and the first right vertex, so the copies are pairwise
    non-adjacent and all have degree 2.  m = 1 reproduces the plain path.
    """
    if k < 1 or m < 1:
        raise ValueError("duplicated_middle_path requires k >= 1 and m >= 1")
    left_end = k - 1
    right_start = k + m
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(right_start + i, right_start + i + 1) for i in range(k - 1)]
    for c in range(k, k + m):
        edges.append((left_end, c))
        edges.append((c, right_start))
    return Graph(2 * k + m, tuple(edges))


def random_tree(n: int, seed: int) -> Graph:
    """Uniformly random labeled tree on n >= 1 vertices, fixed by ``seed``.

    Decodes a random Pruefer sequence; used by the planar-family harness.
    """
    if n < 1:
        raise ValueError("random_tree requires n >= 1")
    if n == 1:
        return Graph(1)
    if n == 2:
        return Graph(2, ((0, 1),))
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    heapq.heapify(leaves)
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u, w = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, w))
    return Graph(n, tuple(edges))


@dataclass(frozen=True)
class BarrenLayout:
    """Vertex classes of the barren graph on N + 7 vertices.

    Classes and cardinalities: V1 = 0..N-1 (N vertices), V2 = {N},
    V3 = {N+1, N+2}, V4 = {N+3, N+4}, V5 = {N+5}, V6 = {N+6}.
    """

    size_param: int

    @property
    def v1(self) -> tuple[int, ...]:
        return tuple(range(self.size_param))

    @property
    def v2(self) -> tuple[int, ...]:
        return (self.size_param,)

    @property
    def v3(self) -> tuple[int, ...]:
        return (self.size_param + 1, self.size_param + 2)

    @property
    def v4(self) -> tuple[int, ...]:
        return (self.size_param + 3, self.size_param + 4)

    @property
    def v5(self) -> tuple[int, ...]:
        return (self.size_param + 5,)

    @property
    def v6(self) -> tuple[int, ...]:
        return (self.size_param + 6,)

    def classes(self) -> dict[str, tuple[int, ...]]:
        return {
            "V1": self.v1,
            "V2": self.v2,
            "V3": self.v3,
            "V4": self.v4,
            "V5": self.v5,
            "V6": self.v6,
        }

    def class_of(self, v: int) -> str:
        for name, members in self.classes().items():
            if v in members:
                return name
        raise IndexError(f"vertex {v} out of range for barren({self.size_param})")


def barren(n: int) -> tuple[Graph, BarrenLayout]:
    """Barren graph on N + 7 vertices: the sum of five complete bipartite blocks.

    Edges join V1 to each of V2, V3, V4, plus V3 to V5 and V4 to V6.  The
    result is bipartite between V2 u V3 u V4 and V1 u V5 u V6, and its
    Fiedler vector is supported on the six vertices of V3 u V4 u V5 u V6.
    """
    if n < 3:
        raise ValueError("barren requires N >= 3")
    layout = BarrenLayout(n)
    edges = []
    for blk_a, blk_b in (
        (layout.v1, layout.v2),
        (layout.v1, layout.v3),
        (layout.v1, layout.v4),
        (layout.v3, layout.v5),
        (layout.v4, layout.v6),
    ):
        edges += [(a, b) for a in blk_a for b in blk_b]
    return Graph(n + 7, tuple(edges)), layout
