"""Finite multigraphs with paired directed edges (Serre's formalism).

An undirected edge is a pair of mutually inverse directed edges; a loop is
stored as two distinct directed edges with equal endpoints, so it contributes
2 to the valence of its vertex and 2 to the self-adjacency count.  Graphs are
immutable after construction and safe to share.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence


@dataclass(frozen=True)
class DirectedEdge:
    id: int
    origin: int
    terminus: int
    inverse_id: int


class SerreGraph:
    """Multigraph given by vertex count and one (origin, terminus) per
    undirected edge; both orientations are materialized automatically."""

    def __init__(
        self,
        num_vertices: int,
        edge_pairs: Sequence[tuple[int, int]],
        labels: Optional[Sequence[str]] = None,
    ):
        if num_vertices < 0:
            raise ValueError("negative vertex count")
        pairs = []
        for u, v in edge_pairs:
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise ValueError(f"edge ({u}, {v}) references a missing vertex")
            pairs.append((int(u), int(v)))
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != num_vertices:
                raise ValueError("label count does not match vertex count")
            if len(set(labels)) != len(labels):
                raise ValueError("vertex labels must be unique")
        self._n = int(num_vertices)
        self._pairs = tuple(pairs)
        self._labels = labels
        edges = []
        for k, (u, v) in enumerate(self._pairs):
            edges.append(DirectedEdge(2 * k, u, v, 2 * k + 1))
            edges.append(DirectedEdge(2 * k + 1, v, u, 2 * k))
        self._edges = tuple(edges)
        out: list[list[DirectedEdge]] = [[] for _ in range(self._n)]
        for e in self._edges:
            out[e.origin].append(e)
        self._out = tuple(tuple(es) for es in out)

    @property
    def num_vertices(self) -> int:
        return self._n

    @property
    def vertices(self) -> range:
        return range(self._n)

    @property
    def labels(self) -> Optional[tuple[str, ...]]:
        return self._labels

    def label_of(self, w: int) -> str:
        self._check_vertex(w)
        return self._labels[w] if self._labels is not None else f"v{w}"

    @property
    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        """The chosen orientation: one directed representative per edge."""
        return self._pairs

    @property
    def directed_edges(self) -> tuple[DirectedEdge, ...]:
        return self._edges

    @property
    def num_undirected_edges(self) -> int:
        return len(self._pairs)

    def edge(self, edge_id: int) -> DirectedEdge:
        return self._edges[edge_id]

    def edges_from(self, w: int) -> tuple[DirectedEdge, ...]:
        self._check_vertex(w)
        return self._out[w]

    def _check_vertex(self, w: int) -> None:
        if not (0 <= w < self._n):
            raise ValueError(f"unknown vertex {w}")

    def valence(self, w: int) -> int:
        """Number of directed edges leaving w (a loop counts twice)."""
        self._check_vertex(w)
        return len(self._out[w])

    def adjacency_count(self, w: int, w2: int) -> int:
        """Number of directed edges from w2 to w."""
        self._check_vertex(w)
        self._check_vertex(w2)
        return sum(1 for e in self._out[w2] if e.terminus == w)

    def euler_characteristic(self) -> int:
        return self._n - self.num_undirected_edges

    def is_connected(self) -> bool:
        """Connectivity of the underlying undirected graph (empty: False)."""
        if self._n == 0:
            return False
        seen = [False] * self._n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            w = queue.popleft()
            for e in self._out[w]:
                if not seen[e.terminus]:
                    seen[e.terminus] = True
                    count += 1
                    queue.append(e.terminus)
        return count == self._n

    def laplacian_matrix(self, ordering: Optional[Sequence[int]] = None) -> list[list[int]]:
        """Valence-minus-adjacency matrix in the given vertex ordering."""
        if ordering is None:
            ordering = list(self.vertices)
        else:
            ordering = list(ordering)
            if sorted(ordering) != list(range(self._n)):
                raise ValueError("ordering must be a permutation of the vertices")
        out = []
        for i, vi in enumerate(ordering):
            row = []
            for j, vj in enumerate(ordering):
                a = self.adjacency_count(vi, vj)
                row.append((self.valence(vi) if i == j else 0) - a)
            out.append(row)
        return out

    def to_dot(self, name: str = "G") -> str:
        """Undirected DOT rendering, one line per undirected edge."""
        lines = [f"graph {name} {{"]
        for w in self.vertices:
            lines.append(f'  "{self.label_of(w)}";')
        for u, v in self._pairs:
            lines.append(f'  "{self.label_of(u)}" -- "{self.label_of(v)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"SerreGraph({self._n} vertices, {self.num_undirected_edges} edges)"


def bouquet(num_loops: int) -> SerreGraph:
    """One vertex carrying the given number of undirected loops."""
    return SerreGraph(1, [(0, 0)] * num_loops)


def cycle_graph(n: int) -> SerreGraph:
    if n < 1:
        raise ValueError("cycle needs at least one vertex")
    return SerreGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SerreGraph:
    if n < 1:
        raise ValueError("path needs at least one vertex")
    return SerreGraph(n, [(i, i + 1) for i in range(n - 1)])


def valence(g: SerreGraph, w: int) -> int:
    return g.valence(w)


def adjacency_count(g: SerreGraph, w: int, w2: int) -> int:
    return g.adjacency_count(w, w2)


def euler_characteristic(g: SerreGraph) -> int:
    return g.euler_characteristic()


def is_connected(g: SerreGraph) -> bool:
    return g.is_connected()


def laplacian_matrix(g: SerreGraph, ordering: Optional[Sequence[int]] = None) -> list[list[int]]:
    return g.laplacian_matrix(ordering)
