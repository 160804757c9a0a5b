"""Exhaustive small-graph corpora: one canonical representative per
isomorphism class.

Generation is orderly edge augmentation: level k holds the canonical forms of
all k-edge graphs on n vertices, produced by adding one edge to every level
k-1 graph and deduplicating by canonical form.  Triangle-free corpora refuse
edge additions that would close a triangle, which is sound because removing
an edge never creates one.  Connectivity is filtered at the end.

Computed corpora are cached in-process; a cache directory can also be used,
with the file layout ``connected-n{N}.g6`` / ``connected-n{N}-trianglefree.g6``
(written atomically).
"""

from __future__ import annotations

from pathlib import Path
from typing import Callable, Iterator

from .graph6 import load_graph6_file, save_graph6_file, to_graph6
from .graphs import Graph, is_connected
from .isomorphism import canonical_graph

DEFAULT_BUDGET = 9

_all_cache: dict[tuple[int, bool], list[Graph]] = {}
_connected_cache: dict[tuple[int, bool], list[Graph]] = {}


def all_graphs(n: int, triangle_free: bool = False) -> list[Graph]:
    """Canonical representatives of every graph on n vertices (connected or
    not), in deterministic order: by edge count, then by graph6 string."""
    key = (n, triangle_free)
    if key in _all_cache:
        return _all_cache[key]
    level = {to_graph6(Graph(n)): Graph(n)}
    out = list(level.values())
    while level:
        nxt: dict[str, Graph] = {}
        for g in level.values():
            for u in range(n):
                row = g.adj[u]
                for v in range(u + 1, n):
                    if row >> v & 1:
                        continue
                    if triangle_free and g.adj[u] & g.adj[v]:
                        continue
                    h = canonical_graph(g.with_edge(u, v))
                    nxt.setdefault(to_graph6(h), h)
        out.extend(nxt[k] for k in sorted(nxt))
        level = nxt
    _all_cache[key] = out
    return out


def connected_graphs(n: int, triangle_free: bool = False) -> list[Graph]:
    """Canonical representatives of the connected graphs on n vertices."""
    key = (n, triangle_free)
    if key not in _connected_cache:
        _connected_cache[key] = [g for g in all_graphs(n, triangle_free) if is_connected(g)]
    return _connected_cache[key]


def enumerate_connected(
    n: int,
    predicate: Callable[[Graph], bool] | None = None,
    triangle_free: bool = False,
    budget: int = DEFAULT_BUDGET,
    cache_dir: str | Path | None = None,
) -> Iterator[Graph]:
    """Stream one representative per isomorphism class of connected graphs of
    order n passing the filter, in deterministic order.

    Raises when n exceeds the configured budget (default 9); raise the budget
    explicitly for larger sweeps, at the cost of much longer enumeration.
    """
    if not 1 <= n <= budget:
        raise ValueError(f"order {n} outside the enumeration budget 1..{budget}")
    graphs = _load_or_build_connected(n, triangle_free, cache_dir)
    for g in graphs:
        if predicate is None or predicate(g):
            yield g


def _cache_path(cache_dir: str | Path, n: int, triangle_free: bool) -> Path:
    suffix = "-trianglefree" if triangle_free else ""
    return Path(cache_dir) / f"connected-n{n}{suffix}.g6"


def _load_or_build_connected(
    n: int, triangle_free: bool, cache_dir: str | Path | None
) -> list[Graph]:
    key = (n, triangle_free)
    if key in _connected_cache:
        graphs = _connected_cache[key]
        if cache_dir is not None:
            path = _cache_path(cache_dir, n, triangle_free)
            if not path.exists():
                save_graph6_file(path, graphs)
        return graphs
    if cache_dir is not None:
        path = _cache_path(cache_dir, n, triangle_free)
        if path.exists():
            graphs = load_graph6_file(path)
            _connected_cache[key] = graphs
            return graphs
    graphs = connected_graphs(n, triangle_free)
    if cache_dir is not None:
        save_graph6_file(_cache_path(cache_dir, n, triangle_free), graphs)
    return graphs
