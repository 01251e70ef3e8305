"""r-brambles on continuous graphs: subtrees, orders, bramble numbers.

A subtree is a connected acyclic union of closed edge segments (possibly
a single point); an r-bramble is a family of subtrees pairwise within
distance r; its order is the minimum point set hitting every member.
Brute-force bramble numbers range over grid-aligned subtrees only and are
reported as grid-certified at their caps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from contigraph.core import (
    INF,
    ContinuousGraph,
    EdgePoint,
    Endpoint,
    Point,
    Distance,
    grid_points,
    point_distance,
    point_on_edge,
    point_sort_key,
)
from contigraph.search import min_set_cover

ZERO = Fraction(0)
ONE = Fraction(1)

Segment = tuple[int, Fraction, Fraction]


@dataclass(frozen=True)
class Subtree:
    """Canonical subtree: explicit endpoints plus merged edge segments."""

    vertices: frozenset[int]
    segments: tuple[Segment, ...]

    def is_empty(self) -> bool:
        return not self.vertices and not self.segments


@dataclass(frozen=True)
class Bramble:
    radius: Fraction
    subtrees: tuple[Subtree, ...]


def make_subtree(
    g: ContinuousGraph,
    vertices: tuple[int, ...] = (),
    segments: tuple[Segment, ...] = (),
) -> Subtree:
    """Canonical form: touching same-edge segments merged, endpoint hits
    recorded as explicit vertices, degenerate endpoint segments absorbed."""
    vset = set()
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
        vset.add(v)
    by_edge: dict[int, list[tuple[Fraction, Fraction]]] = {}
    for e, lo, hi in segments:
        if not 0 <= e < g.m:
            raise ValueError(f"edge index {e} out of range")
        lo, hi = Fraction(lo), Fraction(hi)
        if not ZERO <= lo <= hi <= ONE:
            raise ValueError(f"malformed segment [{lo}, {hi}]")
        by_edge.setdefault(e, []).append((lo, hi))
    canon: list[Segment] = []
    for e in sorted(by_edge):
        merged: list[tuple[Fraction, Fraction]] = []
        for lo, hi in sorted(by_edge[e]):
            if merged and lo <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
            else:
                merged.append((lo, hi))
        u, v = g.edges[e]
        for lo, hi in merged:
            if lo == ZERO:
                vset.add(u)
            if hi == ONE:
                vset.add(v)
            if lo == hi and lo in (ZERO, ONE):
                continue  # absorbed into the vertex
            canon.append((e, lo, hi))
    return Subtree(frozenset(vset), tuple(canon))


def _structure_nodes_edges(g: ContinuousGraph, t: Subtree) -> tuple[list, list[tuple]]:
    """Finite 1-complex view: nodes are involved endpoints and free segment
    ends; every non-degenerate segment is an arc between its end nodes."""
    nodes: set = set(t.vertices)
    arcs: list[tuple] = []
    for e, lo, hi in t.segments:
        u, v = g.edges[e]
        a = u if lo == ZERO else ("end", e, lo)
        b = v if hi == ONE else ("end", e, hi)
        nodes.add(a)
        nodes.add(b)
        if lo < hi:
            arcs.append((a, b))
    return sorted(nodes, key=repr), arcs


def subtree_valid(g: ContinuousGraph, t: Subtree) -> bool:
    """True iff the union of pieces is connected and cycle-free."""
    if t.is_empty():
        return False
    nodes, arcs = _structure_nodes_edges(g, t)
    index = {node: i for i, node in enumerate(nodes)}
    parent = list(range(len(nodes)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    cycle = False
    for a, b in arcs:
        ra, rb = find(index[a]), find(index[b])
        if ra == rb:
            cycle = True
        else:
            parent[ra] = rb
    component_count = len({find(i) for i in range(len(nodes))})
    return component_count == 1 and not cycle


def subtree_contains(g: ContinuousGraph, t: Subtree, p: Point) -> bool:
    if isinstance(p, Endpoint):
        return p.id in t.vertices
    return any(e == p.edge and lo <= p.offset <= hi for e, lo, hi in t.segments)


def subtree_boundary_points(g: ContinuousGraph, t: Subtree) -> tuple[Point, ...]:
    pts = {Endpoint(v) for v in t.vertices}
    for e, lo, hi in t.segments:
        pts.add(point_on_edge(g, e, lo))
        pts.add(point_on_edge(g, e, hi))
    return tuple(sorted(pts, key=point_sort_key))


def _segments_touch(t1: Subtree, t2: Subtree) -> bool:
    for e1, lo1, hi1 in t1.segments:
        for e2, lo2, hi2 in t2.segments:
            if e1 == e2 and max(lo1, lo2) <= min(hi1, hi2):
                return True
    return False


def subtree_distance(g: ContinuousGraph, t1: Subtree, t2: Subtree) -> Distance:
    """Exact minimum point distance between two subtrees.

    Between two fixed segments the distance is a minimum of functions
    linear in each offset (plus the within-edge gap on a shared edge), so
    the minimum over the subtrees is attained at boundary points or at a
    shared point.
    """
    if t1.is_empty() or t2.is_empty():
        raise ValueError("empty subtree")
    if t1.vertices & t2.vertices or _segments_touch(t1, t2):
        return ZERO
    best: Distance = INF
    for x in subtree_boundary_points(g, t1):
        for y in subtree_boundary_points(g, t2):
            d = point_distance(g, x, y)
            if d < best:
                best = d
    return best


def is_r_bramble(g: ContinuousGraph, r: Fraction, subtrees: tuple[Subtree, ...]) -> bool:
    """True iff all subtrees are valid and pairwise within distance r."""
    r = Fraction(r)
    for t in subtrees:
        if not subtree_valid(g, t):
            raise ValueError("invalid subtree in bramble candidate")
    for a, b in combinations(subtrees, 2):
        if subtree_distance(g, a, b) > r:
            return False
    return True


@dataclass(frozen=True)
class OrderResult:
    value: int
    hitters: tuple[Point, ...]
    optimal: bool
    lower_bound: int


def bramble_order(
    g: ContinuousGraph,
    subtrees: tuple[Subtree, ...],
    denominator: int = 2,
    node_cap: int | None = None,
) -> OrderResult:
    """Minimum number of points hitting every subtree, exact.

    Candidates are the grid points plus all subtree boundary points
    (optimal hitters sit at segment boundaries); membership tests are
    exact.  A node-cap hit returns the incumbent plus a valid lower bound.
    """
    if not subtrees:
        return OrderResult(0, (), True, 0)
    candidates: list[Point] = sorted(
        set(grid_points(g, denominator))
        | {p for t in subtrees for p in subtree_boundary_points(g, t)},
        key=point_sort_key,
    )
    masks = []
    kept: list[Point] = []
    seen_masks = set()
    for p in candidates:
        mask = 0
        for i, t in enumerate(subtrees):
            if subtree_contains(g, t, p):
                mask |= 1 << i
        if mask and mask not in seen_masks:
            seen_masks.add(mask)
            masks.append(mask)
            kept.append(p)
    res = min_set_cover(len(subtrees), masks, node_cap)
    hitters = tuple(kept[i] for i in res.chosen)
    return OrderResult(res.size, hitters, res.optimal, res.lower_bound)


def enumerate_grid_subtrees(
    g: ContinuousGraph, denominator: int, max_segments: int
) -> tuple[Subtree, ...]:
    """All valid subtrees that are unions of <= max_segments grid-aligned
    segments, canonical and deduplicated, in a deterministic order."""
    raw_segments: list[Segment] = [
        (e, Fraction(i, denominator), Fraction(j, denominator))
        for e in range(g.m)
        for i in range(denominator + 1)
        for j in range(i, denominator + 1)
    ]
    seen: set[Subtree] = set()
    out: list[Subtree] = []
    for v in range(g.n):
        t = make_subtree(g, (v,))
        seen.add(t)
        out.append(t)
    for k in range(1, max_segments + 1):
        for combo in combinations(raw_segments, k):
            t = make_subtree(g, (), combo)
            if t in seen:
                continue
            if subtree_valid(g, t):
                seen.add(t)
                out.append(t)
    def sort_key(t: Subtree):
        return (tuple(sorted(t.vertices)), t.segments)
    return tuple(sorted(out, key=sort_key))


@dataclass(frozen=True)
class BrambleNumberResult:
    value: int
    witness: tuple[Subtree, ...]
    hitters: tuple[Point, ...]
    subtree_count: int
    complete: bool


def r_bramble_number_bruteforce(
    g: ContinuousGraph,
    r: Fraction,
    denominator: int = 2,
    max_subtrees: int = 3,
    max_segments: int = 1,
    node_cap: int | None = None,
) -> BrambleNumberResult:
    """Max bramble order over grid-aligned brambles within the stated caps.

    Tiny instances only; the value is certified relative to the enumerated
    subtree space (denominator, segment and subtree caps are part of the
    certificate).
    """
    r = Fraction(r)
    subtrees = enumerate_grid_subtrees(g, denominator, max_segments)
    n = len(subtrees)
    compat = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if subtree_distance(g, subtrees[i], subtrees[j]) <= r:
                compat[i] |= 1 << j
                compat[j] |= 1 << i
    best = 0
    best_witness: tuple[Subtree, ...] = ()
    best_hitters: tuple[Point, ...] = ()
    complete = True

    def consider(clique: list[int]) -> None:
        nonlocal best, best_witness, best_hitters, complete
        family = tuple(subtrees[i] for i in clique)
        res = bramble_order(g, family, denominator, node_cap)
        if not res.optimal:
            complete = False
        if res.value > best:
            best = res.value
            best_witness = family
            best_hitters = res.hitters

    def extend(clique: list[int], cands: int) -> None:
        # A hitting point per subtree always suffices, so order <= clique
        # size; stop as soon as the cap-many-singleton optimum is reached.
        if best == max_subtrees:
            return
        if len(clique) > best:
            consider(clique)
        if len(clique) == max_subtrees:
            return
        m = cands
        while m:
            low = m & -m
            j = low.bit_length() - 1
            m ^= low
            extend(clique + [j], m & compat[j])
        return

    for i in range(n):
        if best == max_subtrees:
            break
        higher = ((1 << n) - 1) & ~((1 << (i + 1)) - 1)
        extend([i], compat[i] & higher)
    return BrambleNumberResult(best, best_witness, best_hitters, n, complete)


def treewidth_continuous(
    g: ContinuousGraph,
    denominator: int = 2,
    max_subtrees: int = 3,
    max_segments: int = 1,
    node_cap: int | None = None,
) -> BrambleNumberResult:
    """The 1-bramble number under the brute-force caps."""
    return r_bramble_number_bruteforce(
        g, Fraction(1), denominator, max_subtrees, max_segments, node_cap
    )
