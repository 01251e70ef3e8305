"""Deterministic exact search engines shared by the solvers.

Everything here works on bitmask-encoded instances: an independent-set
instance is an adjacency mask per vertex, a covering instance is an
element mask per candidate.  All tie-breaks are by smallest index, so
witnesses are reproducible.  Node caps never produce a silently wrong
answer: a capped run reports its incumbent together with a valid bound.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Callable, Sequence

NODE_CAP_ENV = "CONTIGRAPH_NODE_CAP"


def default_node_cap() -> int:
    return int(os.environ.get(NODE_CAP_ENV, "2000000"))


class InfeasibleError(RuntimeError):
    """A universe element is covered by no candidate at all."""

    def __init__(self, element: int):
        super().__init__(f"element {element} is covered by no candidate")
        self.element = element


# ---------------------------------------------------------------------------
# Maximum independent set


@dataclass
class MaxISResult:
    value: int
    members: tuple[int, ...]
    optimal: bool
    upper_bound: int
    nodes: int


def _clique_cover_bound(adj: Sequence[int], order: Sequence[int], mask: int) -> int:
    """Greedy partition of ``mask`` into cliques; their count bounds the IS."""
    cliques: list[int] = []
    for v in order:
        bit = 1 << v
        if not mask & bit:
            continue
        for i, c in enumerate(cliques):
            if c & ~adj[v] == 0:
                cliques[i] = c | bit
                break
        else:
            cliques.append(bit)
    return len(cliques)


def max_independent_set(n: int, adj: Sequence[int], node_cap: int | None = None) -> MaxISResult:
    """Exact maximum independent set of a bitmask-adjacency graph.

    Greedy initial incumbent, branching on the highest-degree remaining
    vertex, pruning by a greedy clique cover of the remaining candidates.
    """
    cap = default_node_cap() if node_cap is None else node_cap
    full = (1 << n) - 1
    order = sorted(range(n), key=lambda v: (-(adj[v].bit_count()), v))

    best_mask = 0
    best_val = 0
    rem = full
    while rem:
        v = min(
            (x for x in range(n) if rem & (1 << x)),
            key=lambda x: ((adj[x] & rem).bit_count(), x),
        )
        best_mask |= 1 << v
        best_val += 1
        rem &= ~(adj[v] | (1 << v))

    state = {"nodes": 0, "capped": False, "open_bound": 0, "best_val": best_val, "best_mask": best_mask}

    def rec(mask: int, size: int, chosen: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > cap:
            state["capped"] = True
            state["open_bound"] = max(
                state["open_bound"], size + _clique_cover_bound(adj, order, mask)
            )
            return
        if mask == 0:
            if size > state["best_val"]:
                state["best_val"] = size
                state["best_mask"] = chosen
            return
        if size + _clique_cover_bound(adj, order, mask) <= state["best_val"]:
            return
        v = max(
            (x for x in range(n) if mask & (1 << x)),
            key=lambda x: ((adj[x] & mask).bit_count(), -x),
        )
        bit = 1 << v
        rec(mask & ~(adj[v] | bit), size + 1, chosen | bit)
        rec(mask & ~bit, size, chosen)

    rec(full, 0, 0)
    members = tuple(v for v in range(n) if state["best_mask"] & (1 << v))
    optimal = not state["capped"]
    upper = state["best_val"] if optimal else max(state["best_val"], state["open_bound"])
    return MaxISResult(state["best_val"], members, optimal, upper, state["nodes"])


# ---------------------------------------------------------------------------
# Minimum set cover


@dataclass
class SetCoverResult:
    size: int
    chosen: tuple[int, ...]
    optimal: bool
    lower_bound: int
    nodes: int


def _element_coverers(n_elements: int, candidate_masks: Sequence[int]) -> list[list[int]]:
    coverers: list[list[int]] = [[] for _ in range(n_elements)]
    for c, mask in enumerate(candidate_masks):
        m = mask
        while m:
            low = m & -m
            coverers[low.bit_length() - 1].append(c)
            m ^= low
    for e, row in enumerate(coverers):
        if not row:
            raise InfeasibleError(e)
    return coverers


def min_set_cover(
    n_elements: int, candidate_masks: Sequence[int], node_cap: int | None = None
) -> SetCoverResult:
    """Exact minimum-cardinality cover of ``n_elements`` universe elements.

    Branches on the uncovered element with the fewest admissible
    candidates; prunes with a disjoint-witness lower bound.  Raises
    :class:`InfeasibleError` when some element has no candidate at all.
    """
    cap = default_node_cap() if node_cap is None else node_cap
    if n_elements == 0:
        return SetCoverResult(0, (), True, 0, 0)
    full = (1 << n_elements) - 1
    coverers = _element_coverers(n_elements, candidate_masks)
    cand_bits = [sum(1 << c for c in row) for row in coverers]

    covered = 0
    greedy: list[int] = []
    while covered != full:
        c = max(
            range(len(candidate_masks)),
            key=lambda x: ((candidate_masks[x] & ~covered).bit_count(), -x),
        )
        greedy.append(c)
        covered |= candidate_masks[c]

    def lower_bound(uncovered: int) -> int:
        lb = 0
        used = 0
        m = uncovered
        while m:
            low = m & -m
            e = low.bit_length() - 1
            if cand_bits[e] & used == 0:
                lb += 1
                used |= cand_bits[e]
            m ^= low
        return lb

    state = {
        "nodes": 0,
        "capped": False,
        "open_lb": len(greedy),
        "best": tuple(greedy),
        "best_size": len(greedy),
    }

    def rec(covered: int, chosen: list[int], banned: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > cap:
            state["capped"] = True
            state["open_lb"] = min(
                state["open_lb"], len(chosen) + lower_bound(full & ~covered)
            )
            return
        if covered == full:
            if len(chosen) < state["best_size"]:
                state["best_size"] = len(chosen)
                state["best"] = tuple(chosen)
            return
        uncovered = full & ~covered
        if len(chosen) + lower_bound(uncovered) >= state["best_size"]:
            return
        pick = -1
        pick_row: list[int] = []
        m = uncovered
        while m:
            low = m & -m
            e = low.bit_length() - 1
            row = [c for c in coverers[e] if not banned & (1 << c)]
            if pick == -1 or len(row) < len(pick_row):
                pick, pick_row = e, row
            m ^= low
        if not pick_row:
            return
        local_ban = banned
        for c in pick_row:
            chosen.append(c)
            rec(covered | candidate_masks[c], chosen, local_ban)
            chosen.pop()
            local_ban |= 1 << c

    rec(0, [], 0)
    optimal = not state["capped"]
    lb = state["best_size"] if optimal else min(state["best_size"], state["open_lb"])
    return SetCoverResult(state["best_size"], state["best"], optimal, lb, state["nodes"])


def enumerate_minimal_covers(
    n_elements: int,
    candidate_masks: Sequence[int],
    max_size: int,
    node_cap: int | None = None,
) -> tuple[list[tuple[int, ...]], bool]:
    """All inclusion-minimal covers of size <= max_size, each exactly once.

    Returns (covers, complete); ``complete`` is False when the node cap
    truncated the enumeration.
    """
    cap = default_node_cap() if node_cap is None else node_cap
    if n_elements == 0:
        return [()], True
    full = (1 << n_elements) - 1
    coverers = _element_coverers(n_elements, candidate_masks)
    out: list[tuple[int, ...]] = []
    state = {"nodes": 0, "capped": False}

    def minimal(chosen: list[int]) -> bool:
        for c in chosen:
            rest = 0
            for other in chosen:
                if other != c:
                    rest |= candidate_masks[other]
            if candidate_masks[c] & ~rest == 0:
                return False
        return True

    def rec(covered: int, chosen: list[int], banned: int) -> None:
        state["nodes"] += 1
        if state["nodes"] > cap:
            state["capped"] = True
            return
        if covered == full:
            if minimal(chosen):
                out.append(tuple(sorted(chosen)))
            return
        if len(chosen) >= max_size:
            return
        uncovered = full & ~covered
        pick = -1
        pick_row: list[int] = []
        m = uncovered
        while m:
            low = m & -m
            e = low.bit_length() - 1
            row = [c for c in coverers[e] if not banned & (1 << c)]
            if pick == -1 or len(row) < len(pick_row):
                pick, pick_row = e, row
            m ^= low
        local_ban = banned
        for c in pick_row:
            chosen.append(c)
            rec(covered | candidate_masks[c], chosen, local_ban)
            chosen.pop()
            local_ban |= 1 << c
            if state["capped"]:
                return

    rec(0, [], 0)
    return out, not state["capped"]


def find_admissible_cover(
    n_elements: int,
    candidate_masks: Sequence[int],
    admissible: Callable[[tuple[int, ...]], bool],
    size_budget: int,
    node_cap: int | None = None,
) -> tuple[tuple[int, ...] | None, bool]:
    """First cover (in DFS order) whose every prefix set is admissible.

    ``admissible`` must be monotone downward: if it rejects a set it must
    reject every superset.  Returns (witness, complete); when witness is
    None and complete is True, no admissible cover of size <= size_budget
    exists.
    """
    cap = default_node_cap() if node_cap is None else node_cap
    if n_elements == 0:
        return (), True
    full = (1 << n_elements) - 1
    coverers = _element_coverers(n_elements, candidate_masks)
    state = {"nodes": 0, "capped": False}

    def rec(covered: int, chosen: list[int], banned: int) -> tuple[int, ...] | None:
        state["nodes"] += 1
        if state["nodes"] > cap:
            state["capped"] = True
            return None
        if covered == full:
            return tuple(chosen)
        if len(chosen) >= size_budget:
            return None
        uncovered = full & ~covered
        pick = -1
        pick_row: list[int] = []
        m = uncovered
        while m:
            low = m & -m
            e = low.bit_length() - 1
            row = [c for c in coverers[e] if not banned & (1 << c)]
            if pick == -1 or len(row) < len(pick_row):
                pick, pick_row = e, row
            m ^= low
        local_ban = banned
        for c in pick_row:
            chosen.append(c)
            if admissible(tuple(chosen)):
                found = rec(covered | candidate_masks[c], chosen, local_ban)
                if found is not None:
                    return found
            chosen.pop()
            local_ban |= 1 << c
            if state["capped"]:
                return None
        return None

    witness = rec(0, [], 0)
    return witness, not state["capped"]
