"""(1/2, c)-colourability: colour-labelled half-radius ball covers.

A coloured cover is valid when its centers form a 1/2-cover and no two
same-coloured balls intersect.  Ball intersection reduces to one exact
comparison d(p, q) <= 2r: centers within 2r share their geodesic
midpoint, and the triangle inequality rules intersection out beyond 2r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from contigraph.baselines import CombinatorialGraph, color_assignment
from contigraph.core import (
    ContinuousGraph,
    EdgePoint,
    Endpoint,
    Point,
    adjacency,
    components,
    format_point,
    generate,
    point_distance,
    validate_point,
)
from contigraph.covering import cover_universe, cover_violation
from contigraph.grids import build_grid
from contigraph.search import find_admissible_cover

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ColoredCover:
    """Ball centers with small positive integer colours; radius fixed 1/2."""

    entries: tuple[tuple[Point, int], ...]
    radius: Fraction = HALF

    @property
    def colors_used(self) -> int:
        return len({color for _, color in self.entries})


def balls_intersect(g: ContinuousGraph, p: Point, q: Point, r: Fraction) -> bool:
    """True iff the closed balls B(p, r) and B(q, r) share a point."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    return point_distance(g, p, q) <= 2 * r


def coloring_violation(g: ContinuousGraph, cc: ColoredCover) -> str | None:
    """First violated constraint as a diagnostic string, or None."""
    for p, color in cc.entries:
        validate_point(g, p)
        if not (isinstance(color, int) and color >= 1):
            return f"colour {color!r} at {format_point(p)} is not a positive integer"
    centers = tuple(p for p, _ in cc.entries)
    uncovered = cover_violation(g, cc.radius, centers)
    if uncovered is not None:
        return uncovered
    for i, (p, cp) in enumerate(cc.entries):
        for q, cq in cc.entries[i + 1 :]:
            if cp == cq and p != q and balls_intersect(g, p, q, cc.radius):
                return (
                    f"same colour {cp} on intersecting balls at "
                    f"{format_point(p)} and {format_point(q)}"
                )
    return None


def verify_coloring(g: ContinuousGraph, cc: ColoredCover) -> bool:
    return coloring_violation(g, cc) is None


# ---------------------------------------------------------------------------
# Constructive colouring of complete graphs


def _even_entries(n: int) -> list[tuple[Point, int]]:
    """Matching-based (1/2, n/2)-colouring of the complete graph, n even.

    Matched edge (2k, 2k+1) gets colour k+1 and a midpoint ball; each pair
    of matched edges adds four cross balls at offsets 1/4 and 3/4 so that
    same-coloured centers stay at least 5/4 apart.
    """
    g = generate("complete", n)
    idx = {pair: i for i, pair in enumerate(g.edges)}
    quarter, three_quarters = Fraction(1, 4), Fraction(3, 4)
    entries: list[tuple[Point, int]] = []
    pairs = n // 2
    for k in range(pairs):
        entries.append((EdgePoint(idx[(2 * k, 2 * k + 1)], HALF), k + 1))
    for i in range(pairs):
        u, v = 2 * i, 2 * i + 1
        for j in range(i + 1, pairs):
            x, y = 2 * j, 2 * j + 1
            entries.append((EdgePoint(idx[(u, x)], three_quarters), i + 1))
            entries.append((EdgePoint(idx[(v, y)], three_quarters), i + 1))
            entries.append((EdgePoint(idx[(u, y)], quarter), j + 1))
            entries.append((EdgePoint(idx[(v, x)], quarter), j + 1))
    return entries


def kn_half_coloring(n: int) -> ColoredCover:
    """Valid (1/2, ceil(n/2))-colouring of the complete continuous graph.

    Odd n embeds into the even colouring of the next complete graph and
    keeps the balls that survive inside the smaller graph; the only
    coverage lost that way sits around endpoint n-3, so one extra ball at
    that endpoint (in the dropped matching colour, which stays more than
    2r away) repairs the cover.  The result is verified before returning.
    """
    if n < 2:
        raise ValueError("needs n >= 2")
    if n % 2 == 0:
        entries = _even_entries(n)
    else:
        big_entries = _even_entries(n + 1)
        g_big = generate("complete", n + 1)
        g_small = generate("complete", n)
        idx_small = {pair: i for i, pair in enumerate(g_small.edges)}
        entries = []
        for point, color in big_entries:
            if isinstance(point, Endpoint):
                if point.id < n:
                    entries.append((point, color))
                continue
            pair = g_big.edges[point.edge]
            if pair in idx_small:
                entries.append((EdgePoint(idx_small[pair], point.offset), color))
        entries.append((Endpoint(n - 3), (n + 1) // 2))
    cc = ColoredCover(tuple(entries))
    violation = coloring_violation(generate("complete", n), cc)
    if violation is not None:
        raise AssertionError(f"construction broke its own guarantee: {violation}")
    return cc


# ---------------------------------------------------------------------------
# Exact minimum-colour search over grid-centered covers


def needs_two_colors(g: ContinuousGraph, r: Fraction = HALF) -> bool:
    """Certified lower bound chi >= 2 for radii r <= 1/2.

    One colour forces pairwise non-intersecting closed balls; at least two
    such balls cannot cover a connected component, and a single radius-r
    ball covers total length at most r * max(2, degree).  So any
    edge-bearing component longer than that needs a second colour.
    """
    r = Fraction(r)
    if not 0 < r <= HALF:
        raise ValueError("the length argument assumes 0 < r <= 1/2")
    adj = adjacency(g)
    for endpoints, edge_ids in components(g):
        if not edge_ids:
            continue
        degree = max(len(adj[v]) for v in endpoints)
        if Fraction(len(edge_ids)) > r * max(2, degree):
            return True
    return False


@dataclass(frozen=True)
class ColorAttempt:
    colors: int
    found: bool
    complete: bool  # True: the search space for this c was fully explored


@dataclass(frozen=True)
class ColorSearchResult:
    denominator: int
    center_budget: int
    value: int | None
    witness: ColoredCover | None
    lower_bound: int
    exact: bool
    attempts: tuple[ColorAttempt, ...]

    def summary(self) -> str:
        if self.value is None:
            kind = "exhausted" if all(a.complete for a in self.attempts) else "truncated"
            return f"unknown above bound ({kind}; lower bound {self.lower_bound})"
        label = "grid-certified" if self.exact else "upper bound (search truncated below)"
        return f"{self.value} ({label} at D={self.denominator})"


def _conflict_masks(g: ContinuousGraph, candidates: tuple[Point, ...], r: Fraction) -> list[int]:
    n = len(candidates)
    masks = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if balls_intersect(g, candidates[i], candidates[j], r):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


def _subset_colorable(conflict: list[int], chosen: tuple[int, ...], c: int) -> list[int] | None:
    index = {cand: k for k, cand in enumerate(chosen)}
    adj = [0] * len(chosen)
    for k, cand in enumerate(chosen):
        m = conflict[cand]
        while m:
            low = m & -m
            other = low.bit_length() - 1
            if other in index:
                adj[k] |= 1 << index[other]
            m ^= low
    return color_assignment(CombinatorialGraph(len(chosen), tuple(adj)), c)


def min_colors_exact(
    g: ContinuousGraph,
    denominator: int = 4,
    c_max: int = 4,
    center_budget: int | None = None,
    node_cap: int | None = None,
) -> ColorSearchResult:
    """Smallest c <= c_max admitting a proper colouring of some grid cover.

    For each candidate colour count the search walks covers depth-first,
    pruning any partial ball set that is already not c-colourable (a sound
    prune: conflict graphs of subsets are induced subgraphs).  A completed
    search certifies nonexistence for that c; a node-cap hit is labelled,
    never hidden.
    """
    if denominator < 4:
        raise ValueError("grid denominator must be >= 4 so r=1/2 thresholds are on-grid")
    if c_max < 1:
        raise ValueError("c_max must be >= 1")
    budget = 2 * g.m if center_budget is None else center_budget
    if g.m == 0:
        empty = ColoredCover(())
        return ColorSearchResult(denominator, budget, 0, empty, 0, True, ())
    grid = build_grid(g, denominator)
    n_elems, masks, _ = cover_universe(g, HALF, grid.points)
    conflict = _conflict_masks(g, grid.points, HALF)
    lower = 2 if needs_two_colors(g) else 1
    attempts: list[ColorAttempt] = []
    certified_below = True
    for c in range(1, c_max + 1):
        if c < lower:
            attempts.append(ColorAttempt(c, False, True))
            continue

        def admissible(chosen: tuple[int, ...]) -> bool:
            return _subset_colorable(conflict, chosen, c) is not None

        witness, complete = find_admissible_cover(n_elems, masks, admissible, budget, node_cap)
        attempts.append(ColorAttempt(c, witness is not None, complete))
        if witness is not None:
            colors = _subset_colorable(conflict, witness, c)
            assert colors is not None
            entries = tuple(
                (grid.points[cand], colors[k]) for k, cand in enumerate(witness)
            )
            cc = ColoredCover(entries)
            violation = coloring_violation(g, cc)
            if violation is not None:
                raise AssertionError(f"search produced an invalid colouring: {violation}")
            return ColorSearchResult(
                denominator, budget, c, cc, lower, certified_below, tuple(attempts)
            )
        if not complete:
            certified_below = False
    return ColorSearchResult(denominator, budget, None, None, lower, False, tuple(attempts))


# ---------------------------------------------------------------------------
# Planar candidate probe


@dataclass(frozen=True)
class PlanarCandidateReport:
    denominator: int
    center_budget: int
    node_cap: int
    result: ColorSearchResult
    outcome: str


def planar_candidate_experiment(
    denominator: int = 4,
    center_budget: int | None = None,
    node_cap: int = 250_000,
) -> PlanarCandidateReport:
    """Probe the 8-endpoint planar candidate for (1/2, 2)- or (1/2, 3)-colourability.

    Emits a verified witness when one is found within the stated budget,
    otherwise an explicit exhaustion/truncation certificate; the outcome
    is recorded, not asserted.
    """
    g = generate("planar8")
    budget = 2 * g.m if center_budget is None else center_budget
    result = min_colors_exact(g, denominator, 3, budget, node_cap)
    if result.value == 1:
        outcome = "witness-1-colour"
    elif result.value == 2:
        outcome = "witness-2-colours"
    elif result.value == 3:
        two = next(a for a in result.attempts if a.colors == 2)
        tail = "two-colour search exhausted" if two.complete else "two-colour search truncated"
        outcome = f"witness-3-colours ({tail})"
    elif all(a.complete for a in result.attempts):
        outcome = "exhausted-no-witness"
    else:
        outcome = "truncated-no-witness"
    return PlanarCandidateReport(denominator, budget, node_cap, result, outcome)
