"""Immutable bitset-backed simple graphs and basic structural primitives.

Vertices are dense 0-based indices ``0..n-1``.  Adjacency is one Python int
per vertex: bit ``u`` of ``adj[v]`` is set exactly when ``uv`` is an edge.
Every vertex-set argument and result in this package is such a bitmask,
which keeps the exhaustive sweeps fast without native extensions.
"""

from __future__ import annotations

import math
from typing import Callable, Iterable, Iterator, Sequence

#: Largest supported order; the short graph6 form encodes orders up to 62.
MAX_ORDER = 62

INFINITY = math.inf


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask with exactly the given vertex indices set."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def set_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of the vertex indices in ``mask``."""
    return tuple(iter_bits(mask))


class Graph:
    """A finite simple undirected graph on vertices ``0..n-1``.

    Instances are immutable after construction, so any number of concurrent
    readers is safe.  Mutating helpers such as :meth:`with_edge` return new
    graphs.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be between 1 and {MAX_ORDER}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        """Build a graph from per-vertex neighbor bitmasks, validating them."""
        n = len(adj)
        if not 1 <= n <= MAX_ORDER:
            raise ValueError(f"order must be between 1 and {MAX_ORDER}, got {n}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"adjacency of vertex {v} mentions vertices >= {n}")
            if row >> v & 1:
                raise ValueError(f"loop at vertex {v} is not allowed")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")
        return cls._raw(n, tuple(adj))

    @classmethod
    def _raw(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Internal fast path: trusts that adj is symmetric and loop-free.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    # -- basic accessors ------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self.adj[v] | (1 << v)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as pairs ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted((row.bit_count() for row in self.adj), reverse=True))

    # -- derived graphs --------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy of this graph with the edge ``uv`` added."""
        if u == v:
            raise ValueError(f"loop at vertex {u} is not allowed")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._raw(self.n, tuple(adj))

    def induced(self, mask: int) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph on ``mask``.

        Returns the subgraph (with vertices relabeled ``0..k-1`` in increasing
        original order) together with the tuple mapping new index -> original
        vertex.
        """
        keep = set_of(mask)
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            for u in iter_bits(self.adj[v] & mask):
                adj[i] |= 1 << pos[u]
        return Graph._raw(len(keep), tuple(adj)), keep

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Image of this graph under ``perm`` (``perm[old] = new``)."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertices")
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in iter_bits(self.adj[v]):
                row |= 1 << perm[u]
            adj[perm[v]] = row
        return Graph._raw(self.n, tuple(adj))

    # -- dunder plumbing --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {list(self.edges())!r})"


# -- neighborhoods ---------------------------------------------------------


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S]: the union of S with all neighbors of its members."""
    out = s
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


def open_neighborhood(g: Graph, s: int) -> int:
    """N(S): the union of the open neighborhoods of the members of S."""
    out = 0
    for v in iter_bits(s):
        out |= g.adj[v]
    return out


# -- distances and connectivity ---------------------------------------------


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Distances from ``source`` to every vertex; ``math.inf`` if unreachable."""
    dist: list[float] = [INFINITY] * g.n
    dist[source] = 0
    frontier = 1 << source
    seen = frontier
    d = 0
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        nxt &= ~seen
        d += 1
        for v in iter_bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist

def distance(g: Graph, u: int, v: int) -> float:
    """Length of a shortest u,v-path; ``math.inf`` across components."""
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError("vertex index out of range")
    if u == v:
        return 0
    return bfs_distances(g, u)[v]


def is_connected(g: Graph) -> bool:
    """True when a BFS from vertex 0 reaches every vertex."""
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == g.full_mask


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    out = []
    left = g.full_mask
    while left:
        start = left & -left
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        out.append(seen)
        left &= ~seen
    return out


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests.

    Runs one BFS per vertex; the shortest cycle through the BFS root is the
    first non-tree adjacency found level by level.
    """
    best = INFINITY
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        frontier = [root]
        d = 0
        while frontier and 2 * d + 1 < best:
            nxt = []
            for v in frontier:
                for u in iter_bits(g.adj[v]):
                    if dist[u] == -1:
                        dist[u] = d + 1
                        nxt.append(u)
                    elif dist[u] == d:
                        best = min(best, 2 * d + 1)
                    elif dist[u] == d + 1:
                        best = min(best, 2 * d + 2)
            frontier = nxt
            d += 1
    return best


def is_triangle_free(g: Graph) -> bool:
    """True when the girth is at least 4 (forests count as triangle-free)."""
    return girth(g) >= 4
