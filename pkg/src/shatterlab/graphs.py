"""Labeled simple graphs with deterministic edge order, plus small-scale probes."""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n; edges stored sorted with u < v."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        prev = None
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise ValueError(f"bad edge ({u}, {v}) on {self.n} vertices")
            if prev is not None and (u, v) <= prev:
                raise ValueError("edges must be strictly ascending (canonical form)")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        canon = {(min(u, v), max(u, v)) for u, v in edges}
        for u, v in canon:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
        return cls(n, tuple(sorted(canon)))

    def adjacency(self) -> list[set[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def edge_count(self) -> int:
        return len(self.edges)


def induced_edge_count(graph: Graph, vertices: Iterable[int]) -> int:
    """Number of edges with both endpoints inside the given vertex set."""
    inside = set(vertices)
    for w in inside:
        if not 1 <= w <= graph.n:
            raise ValueError(f"vertex {w} outside 1..{graph.n}")
    return sum(1 for u, v in graph.edges if u in inside and v in inside)


def max_induced_edges(graph: Graph, m: int) -> int:
    """Largest edge count spanned by any m vertices (exhaustive scan)."""
    if not 0 <= m <= graph.n:
        raise ValueError(f"m = {m} outside 0..{graph.n}")
    best = 0
    for subset in itertools.combinations(range(1, graph.n + 1), m):
        count = induced_edge_count(graph, subset)
        if count > best:
            best = count
    return best


def girth(graph: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    BFS from every vertex; the first non-tree edge seen at each level closes
    a shortest cycle through the root, and the minimum over roots is exact.
    """
    adj = graph.adjacency()
    best: int | None = None
    for root in range(1, graph.n + 1):
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if best is not None and dist[u] * 2 >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    cycle = dist[u] + dist[w] + 1
                    if best is None or cycle < best:
                        best = cycle
    return best


def is_bipartite(graph: Graph) -> bool:
    adj = graph.adjacency()
    color: dict[int, int] = {}
    for root in range(1, graph.n + 1):
        if root in color:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def has_four_cycle(graph: Graph) -> bool:
    """True when two vertices share two common neighbours."""
    adj = graph.adjacency()
    for u, v in itertools.combinations(range(1, graph.n + 1), 2):
        if len(adj[u] & adj[v]) >= 2:
            return True
    return False


def parse_graph(text: str) -> Graph:
    """Read the ``.g`` format: header ``n <N>`` then one ``u v`` edge per line."""
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ValueError(f"line {lineno}: expected header 'n <N>', got {line!r}")
            n = int(parts[1])
            if n < 0:
                raise ValueError(f"line {lineno}: bad vertex count {n}")
            continue
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = int(parts[0]), int(parts[1])
        if not (1 <= u < v <= n):
            raise ValueError(f"line {lineno}: bad edge ({u}, {v})")
        if (u, v) in seen:
            raise ValueError(f"line {lineno}: duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise ValueError("missing 'n <N>' header line")
    return Graph.from_edges(n, edges)


def format_graph(graph: Graph) -> str:
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"
