"""Small graph constructors and the brute-force domination polynomial.

Vertices are ``0..n-1``. The labelings below are fixed so that golden tests
can compare adjacency structures directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .exactpoly import IntPolynomial

ORACLE_VERTEX_CAP = 24


class OracleCapExceeded(ValueError):
    pass


class GraphParseError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")
        for v, nbrs in enumerate(self.adj):
            if v in nbrs:
                raise ValueError(f"self-loop at vertex {v}")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"vertex {v} has out-of-range neighbour {u}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency: {v}->{u} without {u}->{v}")

    @classmethod
    def from_edges(cls, n: int, edges) -> Graph:
        adj = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, tuple(frozenset(s) for s in adj))

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def closed_masks(self) -> list[int]:
        """Bitmask of N[v] for each vertex v."""
        return [(1 << v) | sum(1 << u for u in nbrs) for v, nbrs in enumerate(self.adj)]


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(k, (k + 1) % n) for k in range(n)])


def empty(n: int) -> Graph:
    return Graph.from_edges(n, [])


def friendship(n: int) -> Graph:
    """F_n: hub 0, triangle k on hub and vertices 2k-1, 2k."""
    if n < 1:
        raise ValueError("friendship graph needs n >= 1")
    edges = []
    for k in range(1, n + 1):
        a, b = 2 * k - 1, 2 * k
        edges += [(0, a), (0, b), (a, b)]
    return Graph.from_edges(2 * n + 1, edges)


def book(n: int) -> Graph:
    """B_n: spine 0-1; page k adds a=2k, b=2k+1 with edges 0-a, a-b, b-1."""
    if n < 1:
        raise ValueError("book graph needs n >= 1")
    edges = [(0, 1)]
    for k in range(1, n + 1):
        a, b = 2 * k, 2 * k + 1
        edges += [(0, a), (a, b), (b, 1)]
    return Graph.from_edges(2 * n + 2, edges)


def union(g: Graph, h: Graph) -> Graph:
    off = g.n
    edges = g.edges + [(u + off, v + off) for u, v in h.edges]
    return Graph.from_edges(g.n + h.n, edges)


def join(g: Graph, h: Graph) -> Graph:
    off = g.n
    cross = [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(g.n + h.n, union(g, h).edges + cross)


def corona(g: Graph, h: Graph) -> Graph:
    """G o H: copy i of H occupies ``g.n + i*h.n ...`` and is fully joined to vertex i."""
    edges = list(g.edges)
    for i in range(g.n):
        off = g.n + i * h.n
        edges += [(u + off, v + off) for u, v in h.edges]
        edges += [(i, off + v) for v in range(h.n)]
    return Graph.from_edges(g.n + g.n * h.n, edges)


def brute_force_dompoly(g: Graph, cap: int = ORACLE_VERTEX_CAP) -> IntPolynomial:
    """Count dominating sets of every size by enumerating all 2**n vertex subsets.

    ``cover[S]`` (the union of closed neighbourhoods of S) is built by doubling:
    subsets containing vertex k are ``cover[S'] | N[k]`` for S' over lower vertices.
    """
    n = g.n
    if n > cap:
        raise OracleCapExceeded(f"graph has {n} vertices; brute-force oracle cap is {cap}")
    if n == 0:
        return IntPolynomial((1,))
    dtype = np.uint32 if n <= 32 else np.uint64
    cover = np.zeros(1 << n, dtype=dtype)
    size = np.zeros(1 << n, dtype=np.uint8)
    for k, mask in enumerate(g.closed_masks()):
        half = 1 << k
        cover[half : 2 * half] = cover[:half] | dtype(mask)
        size[half : 2 * half] = size[:half] + 1
    full = dtype((1 << n) - 1)
    counts = np.bincount(size[cover == full], minlength=n + 1)
    return IntPolynomial(int(c) for c in counts)


def parse_adjacency(text: str) -> Graph:
    """Parse ``v: u1 u2 ...`` lines (zero-indexed, one line per vertex)."""
    rows: dict[int, set[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, sep, tail = line.partition(":")
        if not sep:
            raise GraphParseError(f"line {lineno}: expected 'v: neighbours'")
        try:
            v = int(head)
            nbrs = {int(tok) for tok in tail.split()}
        except ValueError:
            raise GraphParseError(f"line {lineno}: vertex labels must be integers") from None
        if v in rows:
            raise GraphParseError(f"line {lineno}: vertex {v} listed twice")
        rows[v] = nbrs
    if not rows:
        raise GraphParseError("no vertices found")
    n = len(rows)
    if sorted(rows) != list(range(n)):
        raise GraphParseError(f"vertices must be exactly 0..{n - 1}")
    for v, nbrs in rows.items():
        for u in nbrs:
            if u == v:
                raise GraphParseError(f"self-loop at vertex {v}")
            if u not in rows:
                raise GraphParseError(f"vertex {v} lists unknown neighbour {u}")
            if v not in rows[u]:
                raise GraphParseError(f"asymmetric adjacency: {v} lists {u} but {u} does not list {v}")
    return Graph(n, tuple(frozenset(rows[v]) for v in range(n)))


def read_adjacency(path) -> Graph:
    return parse_adjacency(Path(path).read_text())
