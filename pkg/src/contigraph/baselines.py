"""Exact classic solvers on the combinatorial endpoint graph.

These are the comparison side of every relaxation-gap experiment:
independence number, vertex cover, chromatic number, maximum matching,
treewidth and (capped) bramble number, all exact on small instances.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from contigraph.core import ContinuousGraph
from contigraph.search import max_independent_set, min_set_cover


@dataclass(frozen=True)
class CombinatorialGraph:
    """Simple graph as adjacency bitmasks (symmetric, irreflexive)."""

    n: int
    adj: tuple[int, ...]

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(self.n) if self.adj[v] & (1 << u)]

    def edge_list(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if self.adj[u] & (1 << v)
        ]


def from_continuous(g: ContinuousGraph) -> CombinatorialGraph:
    """The corresponding combinatorial graph: same endpoints and adjacency."""
    adj = [0] * g.n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return CombinatorialGraph(g.n, tuple(adj))


DEFAULT_VERTEX_CAP = 20


def _check_cap(G: CombinatorialGraph, cap: int) -> None:
    if G.n > cap:
        raise ValueError(f"instance has {G.n} vertices, above the exact-solver cap {cap}")


def maximum_independent_set(
    G: CombinatorialGraph, cap: int = DEFAULT_VERTEX_CAP, node_cap: int | None = None
) -> tuple[int, ...]:
    _check_cap(G, cap)
    res = max_independent_set(G.n, G.adj, node_cap)
    if not res.optimal:
        raise RuntimeError("node cap exceeded on a baseline instance")
    return res.members


def alpha_exact(G: CombinatorialGraph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Exact maximum independent set size."""
    return len(maximum_independent_set(G, cap))


def minimum_vertex_cover(G: CombinatorialGraph, cap: int = DEFAULT_VERTEX_CAP) -> tuple[int, ...]:
    """Complement of a maximum independent set, checked to cover every edge."""
    independent = set(maximum_independent_set(G, cap))
    cover = tuple(v for v in range(G.n) if v not in independent)
    cover_set = set(cover)
    for u, v in G.edge_list():
        if u not in cover_set and v not in cover_set:
            raise AssertionError(f"complement misses edge ({u},{v})")
    return cover


def beta_exact(G: CombinatorialGraph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Exact minimum vertex cover size; alpha + beta = n by construction."""
    beta = len(minimum_vertex_cover(G, cap))
    assert alpha_exact(G, cap) + beta == G.n
    return beta


def color_assignment(G: CombinatorialGraph, c: int) -> list[int] | None:
    """A proper colouring with colours 1..c, or None.

    Backtracking over vertices in static degree order with the usual
    new-colour symmetry break; deterministic.
    """
    order = sorted(range(G.n), key=lambda v: (-(G.adj[v].bit_count()), v))
    colors = [0] * G.n

    def place(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = set()
        for u in G.neighbors(v):
            if colors[u]:
                taken.add(colors[u])
        for col in range(1, min(used + 1, c) + 1):
            if col in taken:
                continue
            colors[v] = col
            if place(i + 1, max(used, col)):
                return True
            colors[v] = 0
        return False

    if place(0, 0):
        return colors
    return None


def _greedy_clique(G: CombinatorialGraph) -> int:
    best = 0
    for start in sorted(range(G.n), key=lambda v: (-(G.adj[v].bit_count()), v)):
        clique = [start]
        cands = G.adj[start]
        while cands:
            v = max(
                (x for x in range(G.n) if cands & (1 << x)),
                key=lambda x: ((G.adj[x] & cands).bit_count(), -x),
            )
            clique.append(v)
            cands &= G.adj[v]
        best = max(best, len(clique))
    return best


def chi_exact(G: CombinatorialGraph, cap: int = DEFAULT_VERTEX_CAP) -> int:
    """Exact chromatic number by iterative c-colourability search."""
    _check_cap(G, cap)
    if G.n == 0:
        return 0
    if all(a == 0 for a in G.adj):
        return 1
    for c in range(_greedy_clique(G), G.n + 1):
        if color_assignment(G, c) is not None:
            return c
    raise AssertionError("n colours always suffice")


def max_matching(G: CombinatorialGraph) -> tuple[tuple[int, int], ...]:
    """Exact maximum matching by exhaustive augmenting recursion.

    Deterministic and exact on any graph; exponential, so intended for
    the small instances the constructions use.
    """
    best: list[tuple[int, int]] = []

    def rec(free: int, current: list[tuple[int, int]]) -> None:
        nonlocal best
        if len(current) > len(best):
            best = list(current)
        if len(current) + free.bit_count() // 2 <= len(best):
            return
        if not free:
            return
        v = (free & -free).bit_length() - 1
        rec(free & ~(1 << v), current)
        nbrs = G.adj[v] & free
        while nbrs:
            low = nbrs & -nbrs
            w = low.bit_length() - 1
            current.append((v, w))
            rec(free & ~((1 << v) | low), current)
            current.pop()
            nbrs ^= low
    rec((1 << G.n) - 1, [])
    return tuple(sorted(best))


def treewidth_exact(G: CombinatorialGraph, cap: int = 10) -> int:
    """Exact treewidth by dynamic programming over elimination orders."""
    _check_cap(G, cap)
    n = G.n
    if n == 0:
        return 0
    full = (1 << n) - 1

    def elim_degree(S: int, v: int) -> int:
        # Vertices outside S+{v} adjacent to v or linked to it through S.
        reach = 1 << v
        frontier = 1 << v
        outside = 0
        while frontier:
            low = frontier & -frontier
            x = low.bit_length() - 1
            frontier ^= low
            nbrs = G.adj[x] & ~reach
            outside |= nbrs & ~S
            inside = nbrs & S
            reach |= nbrs
            frontier |= inside
        return (outside & ~(1 << v)).bit_count()

    f = [0] * (1 << n)
    for S in range(1, 1 << n):
        best = n
        m = S
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            prev = S ^ low
            width = max(f[prev], elim_degree(prev, v))
            if width < best:
                best = width
        f[S] = best
    return f[full]


def _connected_subsets(G: CombinatorialGraph) -> list[int]:
    subsets = []
    for mask in range(1, 1 << G.n):
        seed = mask & -mask
        reach = seed
        frontier = seed
        while frontier:
            low = frontier & -frontier
            v = low.bit_length() - 1
            frontier ^= low
            add = G.adj[v] & mask & ~reach
            reach |= add
            frontier |= add
        if reach == mask:
            subsets.append(mask)
    return subsets


def _touching(G: CombinatorialGraph, a: int, b: int) -> bool:
    if a & b:
        return True
    m = a
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if G.adj[v] & b:
            return True
        m ^= low
    return False


def bramble_number_exact(G: CombinatorialGraph, max_sets: int = 4, cap: int = 6) -> int:
    """Max order over combinatorial brambles with at most ``max_sets`` sets.

    A bramble is a family of connected vertex sets pairwise touching
    (sharing a vertex or joined by an edge); its order is the minimum
    vertex set hitting every member.  Brute force, capped.
    """
    _check_cap(G, cap)
    subsets = _connected_subsets(G)
    best = 0
    vertex_masks = [1 << v for v in range(G.n)]
    for k in range(1, max_sets + 1):
        for family in combinations(subsets, k):
            if any(not _touching(G, a, b) for a, b in combinations(family, 2)):
                continue
            masks = [
                sum(1 << i for i, member in enumerate(family) if member & vbit)
                for vbit in vertex_masks
            ]
            order = min_set_cover(len(family), masks).size
            if order > best:
                best = order
    return best
