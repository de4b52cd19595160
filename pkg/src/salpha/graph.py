"""Simple undirected graphs: construction, classification, generators, IO.

Vertices are labeled ``1..n`` at every public boundary. Random generators
use numpy's PCG64 bit generator (``numpy.random.default_rng``), so a given
seed yields the same graph on every platform.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

import numpy as np

from salpha.errors import (
    DuplicateEdge,
    NotConnected,
    ParseError,
    RetriesExhausted,
    SelfLoop,
    SizeTooSmall,
    TooFewVertices,
    VertexOutOfRange,
)

Edge = tuple[int, int]

DEFAULT_MAX_RETRIES = 10_000


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``1..n``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``, sorted
    lexicographically. Use :func:`build_graph` rather than the constructor.
    """

    n: int
    edges: tuple[Edge, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        # index 0 unused so that adjacency[v] works with 1-based labels
        nbrs: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of vertex ``v`` at position ``v - 1``."""
        return tuple(len(self.adjacency[v]) for v in range(1, self.n + 1))

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        if self.edges:
            idx = np.asarray(self.edges) - 1
            a[idx[:, 0], idx[:, 1]] = 1.0
            a[idx[:, 1], idx[:, 0]] = 1.0
        return a

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v - 1]``."""
        perm = list(perm)
        if sorted(perm) != list(range(1, self.n + 1)):
            raise ValueError("perm must be a permutation of 1..n")
        return build_graph(self.n, [(perm[u - 1], perm[v - 1]) for u, v in self.edges])


@dataclass(frozen=True)
class DegreeSequence:
    per_vertex: tuple[int, ...]
    sorted: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return self.sorted[0]


@dataclass(frozen=True)
class GraphClass:
    bipartite: bool
    complete: bool
    tree: bool


def build_graph(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Validate ``edge_list`` and return the corresponding :class:`Graph`.

    Self-loops, duplicates (in either orientation) and labels outside
    ``1..n`` are rejected rather than repaired.
    """
    if n < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {n}")
    seen: set[Edge] = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise SelfLoop(f"self-loop at vertex {u}")
        for x in (u, v):
            if not 1 <= x <= n:
                raise VertexOutOfRange(f"vertex {x} not in 1..{n}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdge(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


def degree_sequence(g: Graph) -> DegreeSequence:
    return DegreeSequence(g.degrees, tuple(sorted(g.degrees, reverse=True)))


def _bfs_order(g: Graph, start: int = 1) -> list[int]:
    seen = [False] * (g.n + 1)
    seen[start] = True
    order = [start]
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
                queue.append(w)
    return order


def is_connected(g: Graph) -> bool:
    return len(_bfs_order(g)) == g.n


def _is_bipartite(g: Graph) -> bool:
    color = [-1] * (g.n + 1)
    for s in range(1, g.n + 1):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def classify(g: Graph) -> GraphClass:
    if not is_connected(g):
        raise NotConnected("classification requires a connected graph")
    return GraphClass(
        bipartite=_is_bipartite(g),
        complete=g.m == g.n * (g.n - 1) // 2,
        tree=g.m == g.n - 1,
    )


# --- generators -----------------------------------------------------------


def generate_er_connected(
    n: int, q: float, seed: int, max_retries: int = DEFAULT_MAX_RETRIES
) -> Graph:
    """Sample G(n, q) until the draw is connected.

    Each attempt consumes ``n(n-1)/2`` uniforms from one PCG64 stream, one
    per pair in the order (1,2), (1,3), ..., (n-1,n); the pair is an edge
    when its uniform is below ``q``.
    """
    if n < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {n}")
    if not 0.0 < q <= 1.0:
        raise ValueError(f"q must lie in (0, 1], got {q}")
    rng = np.random.default_rng(seed)
    iu, ju = np.triu_indices(n, k=1)
    pairs = np.column_stack((iu + 1, ju + 1))
    for _ in range(max_retries):
        keep = rng.random(len(pairs)) < q
        g = Graph(n, tuple((int(u), int(v)) for u, v in pairs[keep]))
        if is_connected(g):
            return g
    raise RetriesExhausted(max_retries)


def prufer_decode(sequence: Iterable[int], n: int) -> Graph:
    """Decode a Prüfer sequence over ``1..n`` (smallest-leaf rule)."""
    seq = [int(x) for x in sequence]
    if n < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {n}")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be n-2={n - 2}, got {len(seq)}")
    for x in seq:
        if not 1 <= x <= n:
            raise VertexOutOfRange(f"vertex {x} not in 1..{n}")
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    leaves = [v for v in range(1, n + 1) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return build_graph(n, edges)


def generate_random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a uniform Prüfer sequence."""
    if n < 2:
        raise TooFewVertices(f"need at least 2 vertices, got {n}")
    rng = np.random.default_rng(seed)
    return prufer_decode(rng.integers(1, n + 1, size=n - 2), n)


_MIN_SIZE = {"path": 2, "cycle": 3, "star": 2, "complete": 2}


def make_named(kind: str, *params: int) -> Graph:
    """Canonical labeled members of a few graph families.

    ``make_named("path", n)``, ``("cycle", n)``, ``("star", n)`` (center 1,
    ``n`` vertices in total), ``("complete", n)`` and
    ``("complete_bipartite", a, b)`` (parts ``1..a`` and ``a+1..a+b``).
    """
    if kind == "complete_bipartite":
        a, b = params
        if a < 1 or b < 1:
            raise SizeTooSmall("complete_bipartite needs both parts non-empty")
        return build_graph(a + b, [(i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)])
    if kind not in _MIN_SIZE:
        raise ValueError(f"unknown graph family {kind!r}")
    (n,) = params
    if n < _MIN_SIZE[kind]:
        raise SizeTooSmall(f"{kind} needs n >= {_MIN_SIZE[kind]}, got {n}")
    if kind == "path":
        edges = [(i, i + 1) for i in range(1, n)]
    elif kind == "cycle":
        edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    elif kind == "star":
        edges = [(1, i) for i in range(2, n + 1)]
    else:
        edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return build_graph(n, edges)


# --- edge-list text format ------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header + ``m`` edge lines format.

    Lines starting with ``#`` and blank lines are skipped anywhere.
    """
    header = None
    pairs: list[Edge] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(lineno, f"expected 2 fields, got {len(fields)}")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer field in {line!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(lineno, "negative count in header")
            header = (a, b, lineno)
        else:
            if len(pairs) == header[1]:
                raise ParseError(lineno, f"more than the declared {header[1]} edges")
            pairs.append((a, b))
    if header is None:
        raise ParseError(0, "missing 'n m' header")
    n, m, hline = header
    if len(pairs) != m:
        raise ParseError(hline, f"header declares {m} edges, found {len(pairs)}")
    return build_graph(n, pairs)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
