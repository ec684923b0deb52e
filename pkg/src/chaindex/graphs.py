"""Builders for the two-rail octagonal-quadrilateral chain networks.

A chain of parameter ``n`` lives on two mirrored rails of ``4n + 1``
vertices each.  Both rails carry a path; rungs join the rails at every
rail index congruent to 0 or 1 (mod 4); the "crossed" variant adds the
two diagonals of every ladder square.  The map exchanging the rails is
an automorphism, which is what the spectral shortcut exploits.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple


class Vertex(NamedTuple):
    """A rail position: ``index`` in 1..4n+1, on the plain or primed rail."""

    index: int
    primed: bool = False

    def mirrored(self) -> "Vertex":
        return Vertex(self.index, not self.primed)

    def __str__(self) -> str:
        return f"{self.index}'" if self.primed else str(self.index)


class Graph:
    """Immutable simple undirected graph with a fixed vertex order.

    The vertex order fixes row/column order of every matrix derived from
    the graph.  Vertices may be any hashable labels.
    """

    def __init__(self, vertices: Iterable, edges: Iterable[tuple]) -> None:
        self.vertices = tuple(vertices)
        self._pos = {v: i for i, v in enumerate(self.vertices)}
        if len(self._pos) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        adjacency: dict = {v: set() for v in self.vertices}
        edge_set = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if u not in self._pos or v not in self._pos:
                raise ValueError(f"edge ({u}, {v}) uses an unknown vertex")
            edge_set.add(frozenset((u, v)))
            adjacency[u].add(v)
            adjacency[v].add(u)
        self.edges = frozenset(edge_set)
        self._adj = {
            v: tuple(sorted(nbrs, key=self._pos.__getitem__))
            for v, nbrs in adjacency.items()
        }

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def position(self, v) -> int:
        return self._pos[v]

    def neighbors(self, v) -> tuple:
        return self._adj[v]

    def degree(self, v) -> int:
        return len(self._adj[v])

    def has_edge(self, u, v) -> bool:
        return frozenset((u, v)) in self.edges

    def distances_from(self, source) -> dict:
        """Breadth-first hop distances from ``source`` to every reachable vertex."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in self._adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return dist

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        return len(self.distances_from(self.vertices[0])) == len(self.vertices)


class ChainGraph(Graph):
    """A crossed or plain chain; vertices are ordered plain rail then primed rail."""

    def __init__(self, n: int, kind: str, edges: Iterable[tuple]) -> None:
        if kind not in ("crossed", "plain"):
            raise ValueError(f"unknown chain kind {kind!r}")
        rail = range(1, 4 * n + 2)
        vertices = [Vertex(i, False) for i in rail] + [Vertex(i, True) for i in rail]
        super().__init__(vertices, edges)
        self.n = n
        self.kind = kind


def rung_indices(n: int) -> list[int]:
    """Rail indices carrying a rung: every i = 0, 1 (mod 4) within 1..4n+1."""
    return [i for i in range(1, 4 * n + 2) if i % 4 in (0, 1)]


def _chain_edges(n: int, crossed: bool) -> list[tuple[Vertex, Vertex]]:
    edges = []
    for i in range(1, 4 * n + 1):
        a, b = Vertex(i), Vertex(i + 1)
        ap, bp = Vertex(i, True), Vertex(i + 1, True)
        edges.append((a, b))
        edges.append((ap, bp))
        if crossed:
            edges.append((a, bp))
            edges.append((ap, b))
    for i in rung_indices(n):
        edges.append((Vertex(i), Vertex(i, True)))
    return edges


def build_crossed_chain(n: int) -> ChainGraph:
    """The crossed chain: rail paths, all ladder diagonals, and 2n+1 rungs.

    Has 8n+2 vertices and 18n+1 edges; degrees are 3 at the four corner
    vertices, 5 at rung-bearing interior indices, 4 elsewhere.
    """
    if n < 1:
        raise ValueError("chain parameter n must be >= 1")
    return ChainGraph(n, "crossed", _chain_edges(n, crossed=True))


def build_plain_chain(n: int) -> ChainGraph:
    """The uncrossed parent chain (10n+1 edges): alternating squares and octagons."""
    if n < 1:
        raise ValueError("chain parameter n must be >= 1")
    return ChainGraph(n, "plain", _chain_edges(n, crossed=False))


def mirror_partition(g: ChainGraph) -> tuple[list[Vertex], list[Vertex]]:
    """The two rails, each ordered by index; the rail swap must be an automorphism."""
    plain_rail = [v for v in g.vertices if not v.primed]
    primed_rail = [v for v in g.vertices if v.primed]
    swapped = {frozenset((u.mirrored(), v.mirrored())) for u, v in g.edges}
    if swapped != g.edges:
        raise ValueError("rail swap is not an automorphism; graph is malformed")
    return plain_rail, primed_rail


def edge_list_text(g: ChainGraph) -> str:
    """Edge-list export: header line, then one `u v` line per edge.

    Vertices print as ``k`` (plain rail) or ``k'`` (primed rail); edges are
    listed in vertex-order-sorted order so the output is deterministic.
    """
    lines = [f"{g.kind}-chain n={g.n}"]
    ordered = sorted(
        (tuple(sorted(e, key=g.position)) for e in g.edges),
        key=lambda e: (g.position(e[0]), g.position(e[1])),
    )
    lines.extend(f"{u} {v}" for u, v in ordered)
    return "\n".join(lines) + "\n"
