"""Minimum r-covers: exact ball traces, grid-exact set cover, duality.

Coverage is always decided symbolically through closed rational
intervals, never by sampling: the trace of a ball on an edge is the union
of at most three closed intervals (entry via either endpoint plus the
within-edge piece when the center sits on that edge), and an edge is
covered iff the union of traces is exactly [0, 1].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from contigraph import baselines
from contigraph.core import (
    INF,
    ContinuousGraph,
    EdgePoint,
    Endpoint,
    Point,
    format_point,
    point_distance,
    point_sort_key,
    validate_point,
)
from contigraph.grids import build_grid, default_denominator, refinement_stable
from contigraph.packing import CERT_BOUND, CERT_CONSTRUCTION, CERT_GRID, max_packing_grid_exact
from contigraph.search import enumerate_minimal_covers, min_set_cover

ZERO = Fraction(0)
ONE = Fraction(1)

Interval = tuple[Fraction, Fraction]


class UncoverablePointError(RuntimeError):
    """A point of some edge is covered by no candidate center."""

    def __init__(self, edge: int, offset: Fraction):
        super().__init__(f"no candidate covers edge {edge} at offset {offset}")
        self.edge = edge
        self.offset = offset


@dataclass(frozen=True)
class EdgeIntervalSet:
    """Disjoint, sorted, closed rational subintervals of one edge."""

    edge: int
    intervals: tuple[Interval, ...]


def merge_closed_intervals(intervals: list[Interval]) -> tuple[Interval, ...]:
    """Sort and merge; touching closed intervals merge into one."""
    merged: list[Interval] = []
    for lo, hi in sorted(intervals):
        if merged and lo <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], hi))
        else:
            merged.append((lo, hi))
    return tuple(merged)


def ball_trace_on_edge(
    g: ContinuousGraph, center: Point, r: Fraction, edge: int
) -> EdgeIntervalSet:
    """Exact set {t in [0,1] : d(center, point(edge, t)) <= r}."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    validate_point(g, center)
    u, v = g.edges[edge]
    pieces: list[Interval] = []
    du = point_distance(g, center, Endpoint(u))
    if du is not INF and du <= r:
        pieces.append((ZERO, min(ONE, r - du)))
    dv = point_distance(g, center, Endpoint(v))
    if dv is not INF and dv <= r:
        pieces.append((max(ZERO, ONE - (r - dv)), ONE))
    if isinstance(center, EdgePoint) and center.edge == edge:
        pieces.append((max(ZERO, center.offset - r), min(ONE, center.offset + r)))
    return EdgeIntervalSet(edge, merge_closed_intervals(pieces))


def coverage_by_edge(
    g: ContinuousGraph, r: Fraction, centers: tuple[Point, ...]
) -> list[tuple[Interval, ...]]:
    """Merged covered intervals per edge, over all centers."""
    out = []
    for e in range(g.m):
        pieces: list[Interval] = []
        for c in centers:
            pieces.extend(ball_trace_on_edge(g, c, r, e).intervals)
        out.append(merge_closed_intervals(pieces))
    return out


def uncovered_gaps(
    g: ContinuousGraph, r: Fraction, centers: tuple[Point, ...]
) -> list[tuple[int, Fraction, Fraction]]:
    """Maximal uncovered pieces as (edge, lo, hi); all have positive length.

    The complement of a finite union of closed intervals inside [0, 1] is
    a finite union of relatively open intervals, so a nonempty gap always
    contains its own midpoint.
    """
    gaps = []
    for e, covered in enumerate(coverage_by_edge(g, r, centers)):
        cursor = ZERO
        for lo, hi in covered:
            if lo > cursor:
                gaps.append((e, cursor, lo))
            cursor = max(cursor, hi)
        if cursor < ONE:
            gaps.append((e, cursor, ONE))
    return gaps


def cover_violation(
    g: ContinuousGraph, r: Fraction, centers: tuple[Point, ...]
) -> str | None:
    for c in centers:
        validate_point(g, c)
    gaps = uncovered_gaps(g, r, centers)
    if not gaps:
        return None
    e, lo, hi = gaps[0]
    return f"edge {e} uncovered on ({lo}, {hi})"


def verify_cover(g: ContinuousGraph, r: Fraction, centers: tuple[Point, ...]) -> bool:
    """True iff every edge's trace union is exactly [0, 1]."""
    return cover_violation(g, r, centers) is None


@dataclass(frozen=True)
class CoverSolution:
    radius: Fraction
    centers: tuple[Point, ...]
    certificate_kind: str
    grid_denominator: int | None = None
    lower_bound: int | None = None

    @property
    def value(self) -> int:
        return len(self.centers)


def make_cover_solution(
    g: ContinuousGraph,
    r: Fraction,
    centers: tuple[Point, ...],
    kind: str,
    grid_denominator: int | None = None,
    lower_bound: int | None = None,
) -> CoverSolution:
    violation = cover_violation(g, r, centers)
    if violation is not None:
        raise ValueError(f"not an r-cover: {violation}")
    ordered = tuple(sorted(centers, key=point_sort_key))
    return CoverSolution(Fraction(r), ordered, kind, grid_denominator, lower_bound)


def _in_intervals(t: Fraction, intervals: tuple[Interval, ...]) -> bool:
    return any(lo <= t <= hi for lo, hi in intervals)


def cover_universe(
    g: ContinuousGraph, r: Fraction, candidates: tuple[Point, ...]
) -> tuple[int, list[int], list[tuple[int, Fraction]]]:
    """Finite universe whose coverage is equivalent to covering every edge.

    Candidate traces are unions of closed intervals with endpoints among
    the per-edge boundary values; covering all boundary points and all
    midpoints of consecutive boundaries is therefore exactly covering
    [0, 1].  Test points with identical coverer sets are deduplicated.
    Returns (element count, per-candidate element masks, element labels).
    """
    traces = [
        [ball_trace_on_edge(g, c, r, e).intervals for e in range(g.m)]
        for c in candidates
    ]
    elements: list[tuple[int, Fraction]] = []
    coverer_sets: list[int] = []
    seen_sets: dict[tuple[int, int], int] = {}
    for e in range(g.m):
        boundaries = {ZERO, ONE}
        for tr in traces:
            for lo, hi in tr[e]:
                boundaries.add(lo)
                boundaries.add(hi)
        ordered = sorted(boundaries)
        tests = list(ordered)
        tests.extend((a + b) / 2 for a, b in zip(ordered, ordered[1:]))
        for t in sorted(tests):
            mask = 0
            for ci, tr in enumerate(traces):
                if _in_intervals(t, tr[e]):
                    mask |= 1 << ci
            if mask == 0:
                raise UncoverablePointError(e, t)
            key = (e, mask)
            if key not in seen_sets:
                seen_sets[key] = len(elements)
                elements.append((e, t))
                coverer_sets.append(mask)
    candidate_masks = [0] * len(candidates)
    for ei, cmask in enumerate(coverer_sets):
        m = cmask
        while m:
            low = m & -m
            candidate_masks[low.bit_length() - 1] |= 1 << ei
            m ^= low
    return len(elements), candidate_masks, elements


def min_cover_grid_exact(
    g: ContinuousGraph,
    r: Fraction,
    denominator: int | None = None,
    node_cap: int | None = None,
) -> CoverSolution:
    """Minimum-cardinality cover with grid candidate centers, exact.

    Branch-and-bound set cover on the equivalent finite universe, always
    branching on the uncovered test point with the fewest candidates.
    Infeasibility (impossible for the default grid) is reported explicitly;
    a node-cap hit returns the incumbent with certificate kind "bound" and
    a valid lower bound.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    D = default_denominator(r) if denominator is None else denominator
    grid = build_grid(g, D)
    n_elems, masks, _ = cover_universe(g, r, grid.points)
    res = min_set_cover(n_elems, masks, node_cap)
    centers = tuple(grid.points[i] for i in res.chosen)
    kind = CERT_GRID if res.optimal else CERT_BOUND
    lower = None if res.optimal else res.lower_bound
    return make_cover_solution(g, r, centers, kind, D, lower)


def enumerate_minimal_grid_covers(
    g: ContinuousGraph,
    r: Fraction,
    denominator: int | None = None,
    max_size: int | None = None,
    node_cap: int | None = None,
) -> tuple[list[tuple[Point, ...]], bool]:
    """All inclusion-minimal grid covers up to max_size (default 2m).

    Returns (covers, complete); complete is False when the enumeration was
    truncated by the node cap.
    """
    r = Fraction(r)
    D = default_denominator(r) if denominator is None else denominator
    if max_size is None:
        max_size = 2 * g.m
    grid = build_grid(g, D)
    n_elems, masks, _ = cover_universe(g, r, grid.points)
    raw, complete = enumerate_minimal_covers(n_elems, masks, max_size, node_cap)
    covers = [tuple(grid.points[i] for i in chosen) for chosen in raw]
    return covers, complete


@dataclass(frozen=True)
class MidpointCoverOutcome:
    """Matching-midpoint construction result; a non-cover is a diagnostic,
    not a crash."""

    centers: tuple[Point, ...]
    covered: bool
    solution: CoverSolution | None
    gaps: tuple[tuple[int, Fraction, Fraction], ...]


def matching_midpoint_cover(g: ContinuousGraph) -> MidpointCoverOutcome:
    """Midpoints of a maximum matching, verified as a 1-cover."""
    matching = baselines.max_matching(baselines.from_continuous(g))
    half = Fraction(1, 2)
    centers = tuple(
        EdgePoint(g.edges.index((min(u, v), max(u, v))), half) for u, v in matching
    )
    centers = tuple(sorted(centers, key=point_sort_key))
    gaps = tuple(uncovered_gaps(g, ONE, centers))
    if gaps:
        return MidpointCoverOutcome(centers, False, None, gaps)
    solution = make_cover_solution(g, ONE, centers, CERT_CONSTRUCTION)
    return MidpointCoverOutcome(centers, True, solution, ())


def alpha1_grid_value(g: ContinuousGraph, r: Fraction, denominator: int) -> int:
    sol = max_packing_grid_exact(g, r, denominator)
    if sol.certificate_kind != CERT_GRID:
        raise RuntimeError("packing solver hit its node cap")
    return sol.value


def beta1_grid_value(g: ContinuousGraph, r: Fraction, denominator: int) -> int:
    sol = min_cover_grid_exact(g, r, denominator)
    if sol.certificate_kind != CERT_GRID:
        raise RuntimeError("cover solver hit its node cap")
    return sol.value


@dataclass(frozen=True)
class DualityRecord:
    n: int
    denominator: int
    alpha1: int
    beta1: int
    holds: bool
    alpha_refinement_stable: bool
    beta_refinement_stable: bool


def duality_report(g: ContinuousGraph, denominator: int = 2) -> DualityRecord:
    """Grid-exact alpha_1 and beta_1 with the alpha+beta=n duality check.

    Refinement stability (value unchanged on the doubled grid) is checked
    before the duality verdict is reported.
    """
    one = Fraction(1)
    alpha_stable = refinement_stable(g, one, alpha1_grid_value, denominator, 1)
    beta_stable = refinement_stable(g, one, beta1_grid_value, denominator, 1)
    alpha1 = alpha1_grid_value(g, one, denominator)
    beta1 = beta1_grid_value(g, one, denominator)
    return DualityRecord(
        g.n, denominator, alpha1, beta1, alpha1 + beta1 == g.n, alpha_stable, beta_stable
    )
