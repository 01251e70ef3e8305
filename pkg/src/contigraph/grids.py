"""Rational candidate grids and refinement-stability bookkeeping.

Grid answers are exact over the grid ("grid-certified at D"); whether a
given denominator preserves the true continuous optimum is checked
empirically by re-solving on doubled grids, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from contigraph.core import ContinuousGraph, Point, grid_points


@dataclass(frozen=True)
class Grid:
    """All endpoints plus interior offsets i/D on every edge."""

    graph: ContinuousGraph
    denominator: int
    points: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.points)


def build_grid(g: ContinuousGraph, denominator: int) -> Grid:
    """Full grid with |points| = n + m*(D-1), canonical and deduplicated."""
    if denominator < 1:
        raise ValueError("grid denominator must be >= 1")
    return Grid(g, denominator, grid_points(g, denominator))


def default_denominator(r: Fraction) -> int:
    """Default grid denominator 2*b for radius a/b in lowest terms.

    At this scale every threshold comparison (d vs 2r, d vs r) is a grid
    comparison with no fraction churn in inner loops.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    return 2 * r.denominator


def refinement_stable(
    g: ContinuousGraph,
    r: Fraction,
    solve: Callable[[ContinuousGraph, Fraction, int], int],
    denominator: int,
    levels: int = 1,
) -> bool:
    """True iff the solver value is identical on grids D, 2D, ..., 2^levels*D."""
    if levels < 1:
        raise ValueError("levels must be >= 1")
    base = solve(g, r, denominator)
    for k in range(1, levels + 1):
        if solve(g, r, denominator * 2**k) != base:
            return False
    return True
