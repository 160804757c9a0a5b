"""Exact domination and independence invariants.

All solvers work on bitmask vertex sets.  Enumeration of minimal dominating
sets branches on the lowest-index undominated vertex, trying each member of
its closed neighborhood with previously tried candidates excluded, and prunes
any branch in which a chosen vertex loses its last private neighbor.  That
tree visits every minimal dominating set exactly once and supports early
exit, which is what the well-dominated decider uses; the public generators
re-yield the sets in lexicographic order for reproducible reports.

The greedy procedure mirrors the classical one for well-dominated graphs:
start from all vertices and drop each vertex, in the given order, whenever
the remainder still dominates.  No asymptotic promise is made for it here;
it is implemented for its behavioral guarantees (minimality, and constant
output size on well-dominated graphs), not its running time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graphs import (
    Graph,
    bfs_distances,
    closed_neighborhood,
    iter_bits,
    set_of,
)


def _closed_adj(g: Graph) -> list[int]:
    return [g.adj[v] | (1 << v) for v in range(g.n)]


# -- elementary predicates ---------------------------------------------------


def is_dominating(g: Graph, s: int) -> bool:
    """True when N[s] covers every vertex."""
    return closed_neighborhood(g, s) == g.full_mask


def private_neighbors(g: Graph, v: int, s: int) -> int:
    """pn[v, s]: vertices u whose closed neighborhood meets s exactly in v."""
    if not s >> v & 1:
        raise ValueError(f"vertex {v} is not in the set")
    bit = 1 << v
    out = 0
    for u in range(g.n):
        if (g.adj[u] | 1 << u) & s == bit:
            out |= 1 << u
    return out


def _members_with_private(g: Graph, s: int) -> int:
    # Mask of members of s that own at least one private neighbor.
    marked = 0
    for u in range(g.n):
        t = (g.adj[u] | 1 << u) & s
        if t and t & (t - 1) == 0:
            marked |= t
    return marked


def is_minimal_dominating(g: Graph, s: int) -> bool:
    """Dominating, and every member keeps a private neighbor."""
    if not is_dominating(g, s):
        return False
    return not s & ~_members_with_private(g, s)


def is_independent(g: Graph, s: int) -> bool:
    for v in iter_bits(s):
        if g.adj[v] & s:
            return False
    return True


def is_maximal_independent(g: Graph, s: int) -> bool:
    return is_independent(g, s) and closed_neighborhood(g, s) == g.full_mask


# -- enumeration kernels ------------------------------------------------------


def _iter_minimal_dominating(g: Graph) -> Iterator[int]:
    """Every minimal dominating set exactly once, in branching (DFS) order."""
    n, full = g.n, g.full_mask
    cadj = _closed_adj(g)

    def rec(smask: int, dominated: int, forbidden: int) -> Iterator[int]:
        if dominated == full:
            yield smask
            return
        u = (~dominated & full)
        u = (u & -u).bit_length() - 1
        f = forbidden
        for c in iter_bits(cadj[u] & ~forbidden):
            s2 = smask | 1 << c
            marked = 0
            for x in range(n):
                t = cadj[x] & s2
                if t and t & (t - 1) == 0:
                    marked |= t
            if not s2 & ~marked:
                yield from rec(s2, dominated | cadj[c], f)
            f |= 1 << c

    yield from rec(0, 0, 0)


def minimal_dominating_sets(g: Graph) -> Iterator[int]:
    """All minimal dominating sets, in lexicographic vertex-tuple order."""
    yield from sorted(_iter_minimal_dominating(g), key=set_of)


def _iter_maximal_independent(g: Graph) -> Iterator[int]:
    """Maximal independent sets in pivoted search order (deterministic)."""
    n, full = g.n, g.full_mask
    nadj = [~(g.adj[v] | 1 << v) & full for v in range(n)]

    def bk(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        px = p | x
        pivot, best = -1, -1
        for v in iter_bits(px):
            c = (nadj[v] & p).bit_count()
            if c > best:
                best, pivot = c, v
        for v in iter_bits(p & ~nadj[pivot]):
            yield from bk(r | 1 << v, p & nadj[v], x & nadj[v])
            p ^= 1 << v
            x |= 1 << v

    yield from bk(0, full, 0)


def maximal_independent_sets(g: Graph) -> Iterator[int]:
    """All maximal independent sets, in lexicographic vertex-tuple order."""
    yield from sorted(_iter_maximal_independent(g), key=set_of)


def _iter_minimal_total_dominating(g: Graph) -> Iterator[int]:
    """Minimal total dominating sets; the graph must have no isolated vertex."""
    n, full = g.n, g.full_mask
    adj = g.adj

    def rec(smask: int, covered: int, forbidden: int) -> Iterator[int]:
        if covered == full:
            yield smask
            return
        u = ~covered & full
        u = (u & -u).bit_length() - 1
        f = forbidden
        for c in iter_bits(adj[u] & ~forbidden):
            s2 = smask | 1 << c
            marked = 0
            for x in range(n):
                t = adj[x] & s2
                if t and t & (t - 1) == 0:
                    marked |= t
            if not s2 & ~marked:
                yield from rec(s2, covered | adj[c], f)
            f |= 1 << c

    yield from rec(0, 0, 0)


# -- optimization -------------------------------------------------------------


def _greedy_cover(g: Graph) -> int:
    cadj = _closed_adj(g)
    undominated = g.full_mask
    s = 0
    while undominated:
        best_v, best_cov = 0, -1
        for v in range(g.n):
            cov = (cadj[v] & undominated).bit_count()
            if cov > best_cov:
                best_v, best_cov = v, cov
        s |= 1 << best_v
        undominated &= ~cadj[best_v]
    return s


@lru_cache(maxsize=None)
def minimum_dominating_set(g: Graph) -> int:
    """One minimum dominating set, by branch and bound with a greedy bound."""
    n, full = g.n, g.full_mask
    cadj = _closed_adj(g)
    best_mask = _greedy_cover(g)
    best = best_mask.bit_count()

    def bb(smask: int, dominated: int, size: int, forbidden: int) -> None:
        nonlocal best, best_mask
        if dominated == full:
            if size < best:
                best, best_mask = size, smask
            return
        rem = full & ~dominated
        maxcov = 0
        for v in range(n):
            c = (cadj[v] & rem).bit_count()
            if c > maxcov:
                maxcov = c
        if size + (rem.bit_count() + maxcov - 1) // maxcov >= best:
            return
        u = (rem & -rem).bit_length() - 1
        cands = sorted(
            iter_bits(cadj[u] & ~forbidden),
            key=lambda c: -(cadj[c] & rem).bit_count(),
        )
        f = forbidden
        for c in cands:
            s2 = smask | 1 << c
            marked = 0
            for x in range(n):
                t = cadj[x] & s2
                if t and t & (t - 1) == 0:
                    marked |= t
            if not s2 & ~marked:
                bb(s2, dominated | cadj[c], size + 1, f)
            f |= 1 << c

    bb(0, 0, 0, 0)
    return best_mask


def domination_number(g: Graph) -> int:
    return minimum_dominating_set(g).bit_count()


def minimum_dominating_sets(g: Graph) -> list[int]:
    """All dominating sets of minimum size, in lexicographic order."""
    k = domination_number(g)
    n, full = g.n, g.full_mask
    cadj = _closed_adj(g)
    out = []

    def rec(smask: int, dominated: int, size: int, forbidden: int) -> None:
        if dominated == full:
            out.append(smask)
            return
        if size == k:
            return
        rem = full & ~dominated
        maxcov = 0
        for v in range(n):
            c = (cadj[v] & rem).bit_count()
            if c > maxcov:
                maxcov = c
        if size + (rem.bit_count() + maxcov - 1) // maxcov > k:
            return
        u = (rem & -rem).bit_length() - 1
        f = forbidden
        for c in iter_bits(cadj[u] & ~forbidden):
            rec(smask | 1 << c, dominated | cadj[c], size + 1, f)
            f |= 1 << c

    rec(0, 0, 0, 0)
    return sorted(out, key=set_of)


@lru_cache(maxsize=None)
def _mis_extrema(g: Graph) -> tuple[int, int, int, int]:
    # (i, alpha, witness_min, witness_max) over maximal independent sets.
    lo = hi = -1
    lo_mask = hi_mask = 0
    for s in _iter_maximal_independent(g):
        k = s.bit_count()
        if lo < 0 or k < lo:
            lo, lo_mask = k, s
        if k > hi:
            hi, hi_mask = k, s
    return lo, hi, lo_mask, hi_mask


def independence_number(g: Graph) -> int:
    return _mis_extrema(g)[1]


def independent_domination_number(g: Graph) -> int:
    return _mis_extrema(g)[0]


@lru_cache(maxsize=None)
def upper_domination_number(g: Graph) -> int:
    return max(s.bit_count() for s in _iter_minimal_dominating(g))


# -- well-dominated / well-covered deciders -----------------------------------


@lru_cache(maxsize=None)
def well_covered_certificate(g: Graph) -> tuple[int, int] | None:
    """None when well-covered, else two maximal independent sets of
    different sizes (smaller first)."""
    first = -1
    first_mask = 0
    for s in _iter_maximal_independent(g):
        k = s.bit_count()
        if first < 0:
            first, first_mask = k, s
        elif k != first:
            return (first_mask, s) if first < k else (s, first_mask)
    return None


def is_well_covered(g: Graph) -> bool:
    return well_covered_certificate(g) is None


@lru_cache(maxsize=None)
def well_dominated_certificate(g: Graph) -> tuple[int, int] | None:
    """None when well-dominated, else two minimal dominating sets of
    different sizes (smaller first).

    Two maximal independent sets of different sizes serve directly, since a
    maximal independent set is always a minimal dominating set; otherwise the
    minimal-dominating stream is scanned with early exit against gamma.
    """
    cert = well_covered_certificate(g)
    if cert is not None:
        return cert
    base = minimum_dominating_set(g)
    k = base.bit_count()
    for s in _iter_minimal_dominating(g):
        if s.bit_count() != k:
            return (base, s)
    return None


def is_well_dominated(g: Graph) -> bool:
    return well_dominated_certificate(g) is None


# -- total domination ----------------------------------------------------------


def has_isolated_vertex(g: Graph) -> bool:
    return any(row == 0 for row in g.adj)


def total_domination_numbers(g: Graph) -> tuple[int, int]:
    """(min, max) cardinality over minimal total dominating sets."""
    if has_isolated_vertex(g):
        raise ValueError("total domination is undefined with an isolated vertex")
    lo = hi = -1
    for s in _iter_minimal_total_dominating(g):
        k = s.bit_count()
        if lo < 0 or k < lo:
            lo = k
        if k > hi:
            hi = k
    return lo, hi


@lru_cache(maxsize=None)
def total_domination_number(g: Graph) -> int:
    return total_domination_numbers(g)[0]


# -- greedy procedures ----------------------------------------------------------


def _check_ordering(g: Graph, ordering) -> list[int]:
    order = list(ordering)
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering is not a permutation of the vertices")
    return order


def greedy_minimal_dominating(g: Graph, ordering) -> int:
    """Start from all vertices; drop each vertex, in order, whenever the
    remainder still dominates.  The result is a minimal dominating set."""
    order = _check_ordering(g, ordering)
    counts = [g.degree(v) + 1 for v in range(g.n)]  # dominators of v inside D
    d = g.full_mask
    for v in order:
        closed = g.adj[v] | 1 << v
        if all(counts[u] >= 2 for u in iter_bits(closed)):
            d ^= 1 << v
            for u in iter_bits(closed):
                counts[u] -= 1
    return d


def greedy_maximal_independent(g: Graph, ordering) -> int:
    """Scan the ordering, adding each vertex with no chosen neighbor."""
    order = _check_ordering(g, ordering)
    s = 0
    for v in order:
        if not g.adj[v] & s:
            s |= 1 << v
    return s


# -- open irredundance ------------------------------------------------------------


def is_open_irredundant(g: Graph, s: int) -> bool:
    """Every member has a private neighbor outside the set:
    N(u) - N[S - u] is nonempty for all u in S."""
    for u in iter_bits(s):
        rest = closed_neighborhood(g, s & ~(1 << u))
        if not g.adj[u] & ~rest:
            return False
    return True


def open_irredundant_minimum_dominating(g: Graph) -> int | None:
    """A minimum dominating set that is open irredundant, or None.

    None never occurs for a graph without isolated vertices; the verify
    module reports it as a counterexample if it ever does.
    """
    if has_isolated_vertex(g):
        raise ValueError("requires a graph without isolated vertices")
    for s in minimum_dominating_sets(g):
        if is_open_irredundant(g, s):
            return s
    return None


# -- packings and isolatable vertices -----------------------------------------------


def is_two_packing(g: Graph, s: int) -> bool:
    """Pairwise distances within the set are all at least 3."""
    members = set_of(s)
    for idx, u in enumerate(members):
        dist = bfs_distances(g, u)
        for v in members[idx + 1:]:
            if dist[v] < 3:
                return False
    return True


def _is_isolatable(g: Graph, x: int) -> bool:
    target = g.adj[x]
    if not target:
        return True  # already isolated (witnessed by the empty set)
    allowed = g.full_mask & ~(g.adj[x] | 1 << x)

    def rec(covered: int, allowed: int) -> bool:
        need = target & ~covered
        if not need:
            return True
        u = (need & -need).bit_length() - 1
        for c in iter_bits(g.adj[u] & allowed):
            if rec(covered | g.adj[c], allowed & ~(g.adj[c] | 1 << c)):
                return True
        return False

    return rec(0, allowed)


def isolatable_vertices(g: Graph) -> int:
    """Vertices x left isolated by deleting N[I] for some independent set I.

    Equivalently: some independent I avoiding N[x] has N(x) inside N[I]; the
    empty set is admitted, so isolated vertices are isolatable.
    """
    out = 0
    for x in range(g.n):
        if _is_isolatable(g, x):
            out |= 1 << x
    return out


def has_isolatable_vertex(g: Graph) -> bool:
    return isolatable_vertices(g) != 0


# -- the profile ----------------------------------------------------------------------


@dataclass(frozen=True)
class DominationProfile:
    """The six classical invariants plus verdicts and witnesses.

    ``gamma_t``/``upper_gamma_t`` are None when the graph has an isolated
    vertex.  Witness fields are vertex bitmasks.
    """

    gamma: int
    upper_gamma: int
    ind_dom: int
    alpha: int
    gamma_t: int | None
    upper_gamma_t: int | None
    well_dominated: bool
    well_covered: bool
    witness_min_dom: int
    witness_max_ind: int

    def to_dict(self) -> dict:
        return {
            "gamma": self.gamma,
            "upper_gamma": self.upper_gamma,
            "independent_domination": self.ind_dom,
            "alpha": self.alpha,
            "gamma_total": self.gamma_t,
            "upper_gamma_total": self.upper_gamma_t,
            "well_dominated": self.well_dominated,
            "well_covered": self.well_covered,
            "witness_min_dom": list(set_of(self.witness_min_dom)),
            "witness_max_ind": list(set_of(self.witness_max_ind)),
        }


def domination_profile(g: Graph) -> DominationProfile:
    """Exact values of gamma, Gamma, i, alpha, gamma_t, Gamma_t and verdicts."""
    witness_min = minimum_dominating_set(g)
    gamma = witness_min.bit_count()
    upper = upper_domination_number(g)
    ind_dom, alpha, _, witness_max = _mis_extrema(g)
    if has_isolated_vertex(g):
        gamma_t = upper_t = None
    else:
        gamma_t, upper_t = total_domination_numbers(g)
    return DominationProfile(
        gamma=gamma,
        upper_gamma=upper,
        ind_dom=ind_dom,
        alpha=alpha,
        gamma_t=gamma_t,
        upper_gamma_t=upper_t,
        well_dominated=gamma == upper,
        well_covered=ind_dom == alpha,
        witness_min_dom=witness_min,
        witness_max_ind=witness_max,
    )
