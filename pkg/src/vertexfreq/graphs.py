"""Finite simple undirected graphs and their basic matrix/metric structure.

A :class:`Graph` is an immutable value: a vertex count ``n`` and a sorted
tuple of undirected edges ``(u, v)`` with ``u < v``.  Vertices are the
integers ``0 .. n-1``.  All operations in this module are pure functions;
edits (``graph_sum``, ``contract_edge``, ...) return new graphs.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "Graph",
    "laplacian_apply",
    "dirichlet_energy",
    "distance",
    "ball",
    "set_distance",
    "connected_components",
    "is_connected",
    "is_bipartite",
    "graph_sum",
    "disjoint_union",
    "add_edges",
    "subdivide_edge",
    "contract_edge",
    "induced_subgraph",
    "parse_edgelist",
    "format_edgelist",
    "graph_to_json",
    "graph_from_json",
    "format_dot",
]


def _normalize_edges(n: int, edges: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    out = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise ValueError(f"self-loop ({u}, {u}) not allowed")
        out.add((u, v) if u < v else (v, u))
    return tuple(sorted(out))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0 .. n-1``.

    Edges are stored once as ``(min, max)`` pairs in sorted order, so equal
    graphs compare equal and all iteration is deterministic.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        object.__setattr__(self, "edges", _normalize_edges(self.n, self.edges))

    @cached_property
    def _neighbor_sets(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def check_vertex(self, v: int) -> int:
        v = int(v)
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range for {self.n} vertices")
        return v

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Sorted neighbors of ``v``."""
        return tuple(sorted(self._neighbor_sets[self.check_vertex(v)]))

    def degree(self, v: int) -> int:
        """Number of edges incident to ``v``."""
        return len(self._neighbor_sets[self.check_vertex(v)])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._neighbor_sets[self.check_vertex(u)] if 0 <= v < self.n else False

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degrees(self) -> np.ndarray:
        return np.array([len(s) for s in self._neighbor_sets], dtype=float)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges:
            a[u, v] = 1.0
            a[v, u] = 1.0
        return a

    def degree_matrix(self) -> np.ndarray:
        return np.diag(self.degrees())

    def laplacian(self) -> np.ndarray:
        """Combinatorial Laplacian: degree matrix minus adjacency matrix."""
        lap = -self.adjacency_matrix()
        lap[np.diag_indices(self.n)] = self.degrees()
        return lap


def laplacian_apply(g: Graph, f: Sequence[float], x: int) -> complex:
    """Evaluate the Laplacian of signal ``f`` at vertex ``x`` pointwise.

    Returns ``sum_{y ~ x} (f(x) - f(y))``, identical to row ``x`` of the
    Laplacian matrix applied to ``f``.
    """
    x = g.check_vertex(x)
    f = np.asarray(f)
    if f.shape != (g.n,):
        raise ValueError(f"signal has shape {f.shape}, expected ({g.n},)")
    nbrs = g._neighbor_sets[x]
    total = len(nbrs) * f[x] - sum(f[y] for y in nbrs)
    return complex(total) if np.iscomplexobj(f) else float(total)


def dirichlet_energy(g: Graph, f: Sequence[float]) -> float:
    """Sum of |f(u) - f(v)|^2 over edges; equals the quadratic form <Lf, f>."""
    f = np.asarray(f)
    if f.shape != (g.n,):
        raise ValueError(f"signal has shape {f.shape}, expected ({g.n},)")
    return float(sum(abs(f[u] - f[v]) ** 2 for u, v in g.edges))


def _bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g._neighbor_sets[x]:
            if math.isinf(dist[y]):
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def distance(g: Graph, x: int, y: int) -> float:
    """Shortest-path length from ``x`` to ``y``; ``math.inf`` when disconnected."""
    x, y = g.check_vertex(x), g.check_vertex(y)
    if x == y:
        return 0
    return _bfs_distances(g, x)[y]


def ball(g: Graph, x: int, r: int) -> tuple[int, ...]:
    """Closed ball: all vertices at distance <= r from x, sorted."""
    x = g.check_vertex(x)
    if r < 0:
        raise ValueError("radius must be non-negative")
    dist = {x: 0}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        if dist[u] == r:
            continue
        for v in g._neighbor_sets[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                queue.append(v)
    return tuple(sorted(dist))


def set_distance(g: Graph, s: Iterable[int], t: Iterable[int]) -> float:
    """Minimum distance over pairs (a in s, b in t); inf if no path."""
    s_set = {g.check_vertex(v) for v in s}
    t_set = {g.check_vertex(v) for v in t}
    if not s_set or not t_set:
        raise ValueError("set_distance requires nonempty sets")
    if s_set & t_set:
        return 0
    # multi-source BFS from s
    dist = {v: 0 for v in s_set}
    queue = deque(sorted(s_set))
    while queue:
        u = queue.popleft()
        for v in g._neighbor_sets[u]:
            if v not in dist:
                dist[v] = dist[u] + 1
                if v in t_set:
                    return dist[v]
                queue.append(v)
    return math.inf


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for v in g._neighbor_sets[u]:
                if not seen[v]:
                    seen[v] = True
                    queue.append(v)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def is_bipartite(g: Graph) -> tuple[bool, tuple[int, ...]]:
    """2-colorability check; returns (flag, one color class as sorted tuple)."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in g._neighbor_sets[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return False, ()
    return True, tuple(v for v in range(g.n) if color[v] == 0)


def graph_sum(g1: Graph, g2: Graph) -> Graph:
    """Union of edge sets over a shared vertex set."""
    if g1.n != g2.n:
        raise ValueError(f"graph_sum needs equal vertex counts, got {g1.n} and {g2.n}")
    return Graph(g1.n, g1.edges + g2.edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Side-by-side union; g2's vertices are shifted up by g1.n."""
    shifted = tuple((u + g1.n, v + g1.n) for u, v in g2.edges)
    return Graph(g1.n + g2.n, g1.edges + shifted)


def add_edges(g: Graph, new_edges: Iterable[tuple[int, int]]) -> Graph:
    """Add edges (duplicates absorbed); rejects self-loops and bad indices."""
    return Graph(g.n, g.edges + tuple((int(u), int(v)) for u, v in new_edges))


def _require_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = sorted((g.check_vertex(e[0]), g.check_vertex(e[1])))
    if (u, v) not in set(g.edges):
        raise ValueError(f"edge ({u}, {v}) not present")
    return u, v


def subdivide_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Replace edge (u, v) by a path u - w - v through the new vertex w = n."""
    u, v = _require_edge(g, e)
    w = g.n
    edges = [p for p in g.edges if p != (u, v)]
    edges += [(u, w), (v, w)]
    return Graph(g.n + 1, tuple(edges))


def contract_edge(g: Graph, e: tuple[int, int]) -> Graph:
    """Identify the endpoints of e, keeping the smaller index.

    Vertices above the removed one are shifted down one slot so the result
    stays densely indexed; parallel edges merge and self-loops disappear.
    """
    u, v = _require_edge(g, e)  # u < v; v is removed

    def remap(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    edges = []
    for a, b in g.edges:
        a2, b2 = remap(a), remap(b)
        if a2 != b2:
            edges.append((a2, b2))
    return Graph(g.n - 1, tuple(edges))


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on ``vertices``; vertex i of the result is ``vertices[i]``."""
    verts = [g.check_vertex(v) for v in vertices]
    if len(set(verts)) != len(verts):
        raise ValueError("induced_subgraph vertices must be distinct")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(verts), tuple(edges))


# --- text formats ---------------------------------------------------------
#
# Edge-list: first line N, then one "u v" pair per line; '#' starts a comment.
# JSON: {"edges": [[u, v], ...], "n": N} with edges sorted.
# DOT:  undirected graph block for visualization.


def parse_edgelist(text: str) -> Graph:
    """Parse the plain edge-list format."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    try:
        n = int(rows[0])
    except ValueError as exc:
        raise ValueError(f"first line must be the vertex count, got {rows[0]!r}") from exc
    edges = []
    for line in rows[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, tuple(edges))


def format_edgelist(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges]}, sort_keys=True)


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    try:
        n = int(data["n"])
        edges = tuple((int(u), int(v)) for u, v in data["edges"])
    except (KeyError, TypeError) as exc:
        raise ValueError("graph JSON must have integer 'n' and an 'edges' list") from exc
    return Graph(n, edges)


def format_dot(g: Graph) -> str:
    lines = ["graph {"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
