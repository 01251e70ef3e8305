"""Maximum r-independent sets (ball packings) on continuous graphs.

A set of points is r-independent when all pairwise distances are >= 2r
(equality allowed).  The grid-exact solver reduces to maximum independent
set of a conflict graph over grid candidates; the constructive routes
come from per-edge greedy placement and matching midpoints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from contigraph import baselines
from contigraph.core import (
    ContinuousGraph,
    EdgePoint,
    Point,
    format_point,
    point_distance,
    point_sort_key,
    validate_point,
)
from contigraph.grids import Grid, build_grid, default_denominator
from contigraph.search import max_independent_set

CERT_GRID = "grid-certified"
CERT_CONSTRUCTION = "construction"
CERT_BOUND = "bound"


@dataclass(frozen=True)
class PackingSolution:
    radius: Fraction
    points: tuple[Point, ...]
    certificate_kind: str
    grid_denominator: int | None = None
    upper_bound: int | None = None

    @property
    def value(self) -> int:
        return len(self.points)


def packing_violation(
    g: ContinuousGraph, r: Fraction, points: tuple[Point, ...]
) -> str | None:
    """First violated pair as a diagnostic string, or None when valid."""
    if r <= 0:
        raise ValueError("radius must be positive")
    for p in points:
        validate_point(g, p)
    pts = sorted(points, key=point_sort_key)
    for i, p in enumerate(pts):
        for q in pts[i + 1 :]:
            d = point_distance(g, p, q)
            if d < 2 * r:
                return f"d({format_point(p)}; {format_point(q)}) = {d} < 2r = {2 * r}"
    return None


def verify_packing(g: ContinuousGraph, r: Fraction, points: tuple[Point, ...]) -> bool:
    """True iff all pairs satisfy d >= 2r exactly."""
    return packing_violation(g, r, points) is None


def make_packing_solution(
    g: ContinuousGraph,
    r: Fraction,
    points: tuple[Point, ...],
    kind: str,
    grid_denominator: int | None = None,
    upper_bound: int | None = None,
) -> PackingSolution:
    """Verified solution constructor; raises on an invalid packing."""
    violation = packing_violation(g, r, points)
    if violation is not None:
        raise ValueError(f"not an r-independent set: {violation}")
    ordered = tuple(sorted(points, key=point_sort_key))
    return PackingSolution(Fraction(r), ordered, kind, grid_denominator, upper_bound)


def conflict_graph(grid: Grid, r: Fraction) -> tuple[int, ...]:
    """Bitmask adjacency over grid points; conflict iff distance < 2r strictly.

    Independent sets of this graph are exactly the valid packings within
    the grid (d = 2r is allowed in a packing).
    """
    g = grid.graph
    pts = grid.points
    n = len(pts)
    threshold = 2 * Fraction(r)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if point_distance(g, pts[i], pts[j]) < threshold:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return tuple(adj)


def max_packing_grid_exact(
    g: ContinuousGraph,
    r: Fraction,
    denominator: int | None = None,
    node_cap: int | None = None,
) -> PackingSolution:
    """Maximum packing among grid candidates, by branch and bound.

    Deterministic; if the node cap is hit the incumbent is returned with
    certificate kind "bound" and a valid upper bound, never silently wrong.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    D = default_denominator(r) if denominator is None else denominator
    grid = build_grid(g, D)
    adj = conflict_graph(grid, r)
    res = max_independent_set(len(grid.points), adj, node_cap)
    points = tuple(grid.points[i] for i in res.members)
    kind = CERT_GRID if res.optimal else CERT_BOUND
    upper = None if res.optimal else res.upper_bound
    return make_packing_solution(g, r, points, kind, D, upper)


def greedy_edge_placement(g: ContinuousGraph, r: Fraction) -> PackingSolution:
    """Per-edge placement at offsets r + i*2r from the lower endpoint.

    Places k = floor(1/(2r)) interior points on every edge; valid for any
    graph because every placed point keeps distance >= r to both edge
    endpoints.
    """
    r = Fraction(r)
    if not 0 < r <= Fraction(1, 2):
        raise ValueError("greedy placement requires 0 < r <= 1/2")
    k = math.floor(Fraction(1) / (2 * r))
    points = [
        EdgePoint(e, r + i * 2 * r) for e in range(g.m) for i in range(k)
    ]
    return make_packing_solution(g, r, tuple(points), CERT_CONSTRUCTION)


def trivial_upper_bound(g: ContinuousGraph, r: Fraction) -> Fraction:
    """The bound n + m/r, exact."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    return Fraction(g.n) + Fraction(g.m) / r


def endpoint_bound_r1(g: ContinuousGraph) -> int:
    """Every 1-independent set has at most n points."""
    return g.n


def _edge_index(g: ContinuousGraph, u: int, v: int) -> int:
    return g.edges.index((min(u, v), max(u, v)))


def matching_midpoints(g: ContinuousGraph) -> PackingSolution:
    """Midpoints of a maximum matching: a verified 1-independent set.

    Matched edges are pairwise disjoint, so midpoint distances are at
    least 1/2 + 1 + 1/2 = 2.
    """
    matching = baselines.max_matching(baselines.from_continuous(g))
    half = Fraction(1, 2)
    points = tuple(EdgePoint(_edge_index(g, u, v), half) for u, v in matching)
    return make_packing_solution(g, Fraction(1), points, CERT_CONSTRUCTION)
