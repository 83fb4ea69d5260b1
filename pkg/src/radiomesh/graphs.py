"""Immutable graphs, family generators, and exact BFS distances.

Everything downstream (labeling validation, span search, claim verdicts)
treats the breadth-first distances computed here as ground truth, so
construction is strict: simple undirected graphs only, validated on
creation, and frozen afterwards.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

UNREACHABLE = -1


class InvalidParameterError(ValueError):
    """An operation was called with arguments outside its contract."""


class DisconnectedGraphError(Exception):
    """The operation needs a connected graph and the input is not one."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids ``0..num_vertices-1``.

    ``adjacency[v]`` is the sorted tuple of neighbors of ``v``. Instances
    are immutable and safe to share between threads.
    """

    num_vertices: int
    adjacency: tuple[tuple[int, ...], ...]

    @staticmethod
    def from_edges(num_vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, rejecting loops and duplicates."""
        if num_vertices <= 0:
            raise InvalidParameterError("graph needs at least one vertex")
        neighbors: list[set[int]] = [set() for _ in range(num_vertices)]
        for u, v in edges:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise InvalidParameterError(f"edge ({u}, {v}) out of range")
            if u == v:
                raise InvalidParameterError(f"self-loop at vertex {u}")
            if v in neighbors[u]:
                raise InvalidParameterError(f"duplicate edge ({u}, {v})")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return Graph(num_vertices, tuple(tuple(sorted(s)) for s in neighbors))

    @property
    def num_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in sorted order."""
        return [(u, v) for u in range(self.num_vertices) for v in self.adjacency[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


def build_path(m: int) -> Graph:
    """Path on ``m`` vertices: 0 - 1 - ... - m-1."""
    if m < 1:
        raise InvalidParameterError(f"path order must be >= 1, got {m}")
    return Graph.from_edges(m, [(i, i + 1) for i in range(m - 1)])


def build_star(n: int) -> Graph:
    """Star with hub 0 adjacent to the ``n`` leaves 1..n."""
    if n < 1:
        raise InvalidParameterError(f"star leaf count must be >= 1, got {n}")
    return Graph.from_edges(n + 1, [(0, leaf) for leaf in range(1, n + 1)])


def cartesian_product(factors: Sequence[Graph]) -> Graph:
    """Cartesian product of two or more graphs, folded left to right.

    Vertices are tuples flattened in mixed radix (leftmost factor most
    significant); two tuples are adjacent iff they agree in all
    coordinates but one and differ by an edge there.
    """
    factors = list(factors)
    if len(factors) < 2:
        raise InvalidParameterError("cartesian product needs at least two factors")
    for g in factors:
        if g.num_vertices == 0:
            raise InvalidParameterError("cartesian product factors must be non-empty")
    return reduce(_binary_product, factors)


def _binary_product(a: Graph, b: Graph) -> Graph:
    nb = b.num_vertices
    edges = []
    for u in range(a.num_vertices):
        for v in range(b.num_vertices):
            base = u * nb + v
            for w in a.adjacency[u]:
                if w > u:
                    edges.append((base, w * nb + v))
            for x in b.adjacency[v]:
                if x > v:
                    edges.append((base, u * nb + x))
    return Graph.from_edges(a.num_vertices * nb, edges)


def build_mesh(m: int) -> Graph:
    """Square mesh (m x m grid graph), the product of two order-m paths."""
    if m < 2:
        raise InvalidParameterError(f"mesh order must be >= 2, got {m}")
    p = build_path(m)
    return cartesian_product([p, p])


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop counts from ``source``; UNREACHABLE marks unreached vertices."""
    if not 0 <= source < g.num_vertices:
        raise InvalidParameterError(f"source {source} out of range")
    dist = np.full(g.num_vertices, UNREACHABLE, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    adjacency = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adjacency[u]:
            if dist[w] == UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


class DistanceMatrix:
    """All-pairs BFS hop counts for one graph, with the diameter cached.

    Entries equal to UNREACHABLE mark pairs in different components; the
    ``diameter`` property refuses to summarize such a matrix.
    """

    __slots__ = ("matrix", "_diameter")

    def __init__(self, matrix: np.ndarray):
        self.matrix = matrix
        self._diameter: int | None = None

    def __getitem__(self, pair: tuple[int, int]) -> int:
        u, v = pair
        return int(self.matrix[u, v])

    def row(self, u: int) -> np.ndarray:
        return self.matrix[u]

    @property
    def num_vertices(self) -> int:
        return self.matrix.shape[0]

    @property
    def diameter(self) -> int:
        if self._diameter is None:
            if bool((self.matrix == UNREACHABLE).any()):
                raise DisconnectedGraphError("graph is disconnected; diameter undefined")
            self._diameter = int(self.matrix.max())
        return self._diameter


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every source, stacked into one symmetric matrix."""
    rows = [bfs_distances(g, s) for s in range(g.num_vertices)]
    return DistanceMatrix(np.stack(rows))


def is_connected(g: Graph) -> bool:
    return bool((bfs_distances(g, 0) != UNREACHABLE).all())


def diameter(g: Graph) -> int:
    """Exact diameter by all-pairs BFS; raises on disconnected input."""
    return all_pairs_distances(g).diameter
