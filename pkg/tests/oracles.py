"""Independent brute-force oracles for the exact solvers.

Deliberately naive: plain subset enumeration, no pruning, no shared code
with the library's branch-and-bound paths.  Kept separate so the oracle
stays independent of the search it checks.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from contigraph.core import ContinuousGraph, Point, grid_points, point_distance
from contigraph.covering import verify_cover
from contigraph.brambles import Subtree, subtree_contains


def brute_max_independent_set(n: int, adj: list[int]) -> int:
    best = 0
    for mask in range(1 << n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if adj[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            best = max(best, mask.bit_count())
    return best


def brute_min_set_cover(n_elements: int, candidate_masks: list[int]) -> int | None:
    full = (1 << n_elements) - 1
    for size in range(len(candidate_masks) + 1):
        for combo in combinations(range(len(candidate_masks)), size):
            acc = 0
            for c in combo:
                acc |= candidate_masks[c]
            if acc == full:
                return size
    return None


def brute_max_packing(g: ContinuousGraph, r: Fraction, candidates: tuple[Point, ...]) -> int:
    """Largest subset with pairwise distance >= 2r, by subset enumeration."""
    n = len(candidates)
    threshold = 2 * Fraction(r)
    best = 0
    for size in range(n, 0, -1):
        if size <= best:
            break
        for combo in combinations(range(n), size):
            if all(
                point_distance(g, candidates[i], candidates[j]) >= threshold
                for i, j in combinations(combo, 2)
            ):
                best = size
                break
    return best


def brute_min_cover(g: ContinuousGraph, r: Fraction, candidates: tuple[Point, ...]) -> int | None:
    """Smallest center subset passing the symbolic cover check."""
    for size in range(len(candidates) + 1):
        for combo in combinations(candidates, size):
            if verify_cover(g, r, combo):
                return size
    return None


def brute_min_hitting(
    g: ContinuousGraph, subtrees: tuple[Subtree, ...], candidates: tuple[Point, ...]
) -> int | None:
    for size in range(len(candidates) + 1):
        for combo in combinations(candidates, size):
            if all(any(subtree_contains(g, t, p) for p in combo) for t in subtrees):
                return size
    return None


def brute_max_matching_size(n: int, edges: list[tuple[int, int]]) -> int:
    best = 0
    for size in range(len(edges), 0, -1):
        if size <= best:
            break
        for combo in combinations(edges, size):
            used = set()
            ok = True
            for u, v in combo:
                if u in used or v in used:
                    ok = False
                    break
                used.add(u)
                used.add(v)
            if ok:
                best = size
                break
    return best


def brute_diameter_on_grid(g: ContinuousGraph, denominator: int) -> Fraction:
    pts = grid_points(g, denominator)
    best = Fraction(0)
    for p, q in combinations(pts, 2):
        d = point_distance(g, p, q)
        if d != float("inf") and d > best:
            best = d
    return best
