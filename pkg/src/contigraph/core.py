"""Continuous graphs, points, the exact shortest-path metric, and balls.

Endpoints are the classical vertices.  Every edge is a unit-length closed
interval; a point of the graph is either an endpoint or an interior edge
position given by a rational offset from the edge's first (lower-indexed)
endpoint.  Distances are computed exactly with ``fractions.Fraction``;
``INF`` (``math.inf``) marks pairs in different connectivity components
and never mixes with finite arithmetic.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

INF = math.inf

#: A finite exact distance, or INF across components.
Distance = Union[Fraction, float]

ZERO = Fraction(0)
ONE = Fraction(1)


class InvalidPointError(ValueError):
    """A point does not belong to the graph it is used with."""


@dataclass(frozen=True)
class ContinuousGraph:
    """Endpoints ``0..n-1`` plus unit-length continuous edges.

    Edges are unordered pairs, stored normalized as ``(min, max)`` in the
    order given at construction (edge indices are stable).  Self-loops and
    parallel edges are rejected; isolated endpoints are allowed.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("endpoint count must be non-negative")
        normalized = []
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at endpoint {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) references an invalid endpoint")
            pair = (min(u, v), max(u, v))
            if pair in seen:
                raise ValueError(f"duplicate edge {pair}")
            seen.add(pair)
            normalized.append(pair)
        object.__setattr__(self, "edges", tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class Endpoint:
    """A classical vertex used as a point of the continuous graph."""

    id: int


@dataclass(frozen=True)
class EdgePoint:
    """Interior edge point at rational ``offset`` from the first endpoint.

    Offsets 0 and 1 are not representable here; canonicalize through
    :func:`point_on_edge` so every point has a unique representation.
    """

    edge: int
    offset: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.offset, Fraction):
            object.__setattr__(self, "offset", Fraction(self.offset))
        if not ZERO < self.offset < ONE:
            raise InvalidPointError(f"interior offset must satisfy 0 < t < 1, got {self.offset}")


Point = Union[Endpoint, EdgePoint]


def point_on_edge(g: ContinuousGraph, edge: int, offset: Fraction) -> Point:
    """Canonical point at ``offset`` along ``edge`` (0/1 become endpoints)."""
    if not 0 <= edge < g.m:
        raise InvalidPointError(f"edge index {edge} out of range")
    offset = Fraction(offset)
    if offset == ZERO:
        return Endpoint(g.edges[edge][0])
    if offset == ONE:
        return Endpoint(g.edges[edge][1])
    if not ZERO < offset < ONE:
        raise InvalidPointError(f"offset {offset} outside [0, 1]")
    return EdgePoint(edge, offset)


def validate_point(g: ContinuousGraph, p: Point) -> None:
    if isinstance(p, Endpoint):
        if not 0 <= p.id < g.n:
            raise InvalidPointError(f"endpoint {p.id} out of range")
    elif isinstance(p, EdgePoint):
        if not 0 <= p.edge < g.m:
            raise InvalidPointError(f"edge index {p.edge} out of range")
    else:
        raise InvalidPointError(f"not a point: {p!r}")


def point_sort_key(p: Point) -> tuple:
    """Deterministic total order: endpoints by id, then edge points."""
    if isinstance(p, Endpoint):
        return (0, p.id, ZERO)
    return (1, p.edge, p.offset)


def format_point(p: Point) -> str:
    """Literal form used in solution files: ``v <id>`` / ``e <idx> <num>/<den>``."""
    if isinstance(p, Endpoint):
        return f"v {p.id}"
    return f"e {p.edge} {p.offset.numerator}/{p.offset.denominator}"


@lru_cache(maxsize=None)
def adjacency(g: ContinuousGraph) -> tuple[tuple[int, ...], ...]:
    """Neighbor lists of the endpoint graph, ascending."""
    nbrs: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    return tuple(tuple(sorted(row)) for row in nbrs)


@lru_cache(maxsize=None)
def incident_edges(g: ContinuousGraph) -> tuple[tuple[int, ...], ...]:
    rows: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        rows[u].append(i)
        rows[v].append(i)
    return tuple(tuple(row) for row in rows)


def max_degree(g: ContinuousGraph) -> int:
    if g.n == 0:
        return 0
    return max(len(row) for row in adjacency(g))


@lru_cache(maxsize=None)
def endpoint_apsp(g: ContinuousGraph) -> tuple[tuple[Distance, ...], ...]:
    """All-pairs endpoint distances by BFS; entries are integers or INF."""
    adj = adjacency(g)
    rows = []
    for src in range(g.n):
        dist: list[Distance] = [INF] * g.n
        dist[src] = 0
        queue = deque([src])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if dist[y] is INF:
                    dist[y] = dist[x] + 1
                    queue.append(y)
        rows.append(tuple(dist))
    return tuple(rows)


def _anchors(g: ContinuousGraph, p: Point) -> tuple[tuple[int, Fraction], ...]:
    """(endpoint, exact offset to it) pairs through which paths may leave p."""
    if isinstance(p, Endpoint):
        return ((p.id, ZERO),)
    u, v = g.edges[p.edge]
    return ((u, p.offset), (v, ONE - p.offset))


def point_distance(g: ContinuousGraph, p: Point, q: Point) -> Distance:
    """Exact shortest-path distance between two points.

    Minimum over the direct within-edge route (when both points share an
    edge) and all endpoint-to-endpoint routes; INF across components.
    """
    validate_point(g, p)
    validate_point(g, q)
    if p == q:
        return ZERO
    best: Distance = INF
    if isinstance(p, EdgePoint) and isinstance(q, EdgePoint) and p.edge == q.edge:
        best = abs(p.offset - q.offset)
    apsp = endpoint_apsp(g)
    for a, da in _anchors(g, p):
        for b, db in _anchors(g, q):
            mid = apsp[a][b]
            if mid is INF:
                continue
            cand = da + mid + db
            if cand < best:
                best = cand
    return best


def components(g: ContinuousGraph) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
    """Connectivity components as (endpoints, edge indices) pairs.

    Two endpoints share a part iff their distance is finite; each edge lies
    wholly in the part of its endpoints.  Parts are ordered by smallest
    endpoint.
    """
    adj = adjacency(g)
    seen = [False] * g.n
    parts = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        group = [start]
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    group.append(y)
                    queue.append(y)
        group_set = set(group)
        edge_ids = tuple(i for i, (u, _) in enumerate(g.edges) if u in group_set)
        parts.append((tuple(sorted(group)), edge_ids))
    return tuple(parts)


def grid_points(g: ContinuousGraph, denominator: int) -> tuple[Point, ...]:
    """All endpoints plus interior offsets i/D on every edge, canonical order."""
    if denominator < 1:
        raise ValueError("denominator must be a positive integer")
    pts: list[Point] = [Endpoint(i) for i in range(g.n)]
    for e in range(g.m):
        for i in range(1, denominator):
            pts.append(EdgePoint(e, Fraction(i, denominator)))
    return tuple(pts)


def component_diameters(g: ContinuousGraph) -> tuple[Distance, ...]:
    """Exact diameter of every connectivity component.

    Between two fixed edges the distance is a minimum of linear functions
    of the two offsets whose pairwise crossings have quarter-integer
    coordinates, so the supremum over all continuous points is attained on
    the denominator-4 grid.
    """
    pts = grid_points(g, 4)
    parts = components(g)
    out = []
    for endpoints, edge_ids in parts:
        ep_set = set(endpoints)
        edge_set = set(edge_ids)
        local = [
            p
            for p in pts
            if (isinstance(p, Endpoint) and p.id in ep_set)
            or (isinstance(p, EdgePoint) and p.edge in edge_set)
        ]
        best = ZERO
        for i, p in enumerate(local):
            for q in local[i + 1 :]:
                d = point_distance(g, p, q)
                if d > best:
                    best = d
        out.append(best)
    return tuple(out)


def diameter(g: ContinuousGraph) -> Distance:
    """Supremum of point distances over the whole graph; INF if disconnected."""
    parts = components(g)
    if len(parts) >= 2:
        return INF
    if len(parts) == 0:
        return ZERO
    return component_diameters(g)[0]


def ball_covers_point(g: ContinuousGraph, center: Point, r: Fraction, p: Point) -> bool:
    """True iff ``p`` lies in the closed ball B(center, r)."""
    if r <= 0:
        raise ValueError("radius must be positive")
    return point_distance(g, center, p) <= r


@lru_cache(maxsize=None)
def _bfs_parents(g: ContinuousGraph, src: int) -> tuple[int, ...]:
    adj = adjacency(g)
    parent = [-1] * g.n
    parent[src] = src
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                queue.append(y)
    return tuple(parent)


def endpoint_path(g: ContinuousGraph, a: int, b: int) -> list[int] | None:
    """One shortest endpoint path from a to b (BFS, ascending tie-break)."""
    parent = _bfs_parents(g, a)
    if parent[b] == -1:
        return None
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def _edge_between(g: ContinuousGraph, u: int, v: int) -> int:
    pair = (min(u, v), max(u, v))
    return g.edges.index(pair)


def geodesic_midpoint(g: ContinuousGraph, p: Point, q: Point) -> Point:
    """A point at exactly half the distance from both p and q.

    Walks a shortest route; the result is canonical and exact.  Raises if
    the two points lie in different components.
    """
    d = point_distance(g, p, q)
    if d is INF:
        raise ValueError("points lie in different components")
    if d == ZERO:
        return p
    # Route as (edge, start offset, end offset) steps, each along one edge.
    steps: list[tuple[int, Fraction, Fraction]] = []
    if isinstance(p, EdgePoint) and isinstance(q, EdgePoint) and p.edge == q.edge and abs(p.offset - q.offset) == d:
        steps.append((p.edge, p.offset, q.offset))
    else:
        apsp = endpoint_apsp(g)
        route = None
        for a, da in _anchors(g, p):
            for b, db in _anchors(g, q):
                if apsp[a][b] is not INF and da + apsp[a][b] + db == d:
                    route = (a, da, b, db)
                    break
            if route:
                break
        assert route is not None
        a, da, b, db = route
        if isinstance(p, EdgePoint):
            u, v = g.edges[p.edge]
            steps.append((p.edge, p.offset, ZERO if a == u else ONE))
        path = endpoint_path(g, a, b)
        assert path is not None
        for x, y in zip(path, path[1:]):
            e = _edge_between(g, x, y)
            lo = ZERO if g.edges[e][0] == x else ONE
            steps.append((e, lo, ONE - lo))
        if isinstance(q, EdgePoint):
            u, v = g.edges[q.edge]
            steps.append((q.edge, ZERO if b == u else ONE, q.offset))
    remaining = d / 2
    for e, start, end in steps:
        length = abs(end - start)
        if remaining <= length:
            direction = 1 if end > start else -1
            return point_on_edge(g, e, start + direction * remaining)
        remaining -= length
    raise AssertionError("midpoint walk overran the route")


def total_edge_length(g: ContinuousGraph) -> Fraction:
    return Fraction(g.m)


# ---------------------------------------------------------------------------
# Graph families


def _complete(n: int) -> ContinuousGraph:
    if n < 1:
        raise ValueError("complete family needs n >= 1")
    return ContinuousGraph(n, tuple((u, v) for u in range(n) for v in range(u + 1, n)))


def _path(n: int) -> ContinuousGraph:
    if n < 1:
        raise ValueError("path family needs n >= 1")
    return ContinuousGraph(n, tuple((i, i + 1) for i in range(n - 1)))


def _cycle(n: int) -> ContinuousGraph:
    if n < 3:
        raise ValueError("cycle family needs n >= 3")
    return ContinuousGraph(n, tuple((i, (i + 1) % n) for i in range(n)))


def _star(n: int) -> ContinuousGraph:
    if n < 1:
        raise ValueError("star family needs n >= 1")
    return ContinuousGraph(n, tuple((0, i) for i in range(1, n)))


def _edgeless(n: int) -> ContinuousGraph:
    if n < 1:
        raise ValueError("edgeless family needs n >= 1")
    return ContinuousGraph(n, ())


ENVELOPE_N = 6


def _envelope(n: int) -> ContinuousGraph:
    """Square 0-1-2-3, diagonal crossing 4, roof apex 5 above corners 2,3."""
    if n != ENVELOPE_N:
        raise ValueError("envelope family is fixed at n=6")
    edges = (
        (0, 1), (1, 2), (2, 3), (0, 3),
        (0, 4), (1, 4), (2, 4), (3, 4),
        (2, 5), (3, 5),
    )
    return ContinuousGraph(6, edges)


PLANAR8_N = 8


def _planar8(n: int) -> ContinuousGraph:
    """Planar-embedded K4 with one extra endpoint per face, joined to the
    three endpoints incident to that face (faces (0,1,3), (1,2,3), (0,2,3)
    and the outer face (0,1,2))."""
    if n != PLANAR8_N:
        raise ValueError("planar8 family is fixed at n=8")
    base = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    faces = [(0, 1, 3), (1, 2, 3), (0, 2, 3), (0, 1, 2)]
    extra = [(4 + i, w) for i, face in enumerate(faces) for w in face]
    return ContinuousGraph(8, tuple(base + extra))


FAMILIES: dict[str, Callable[[int], ContinuousGraph]] = {
    "complete": _complete,
    "path": _path,
    "cycle": _cycle,
    "star": _star,
    "edgeless": _edgeless,
    "envelope": _envelope,
    "planar8": _planar8,
}

_FIXED_FAMILY_SIZES = {"envelope": ENVELOPE_N, "planar8": PLANAR8_N}


def generate(family: str, n: int | None = None) -> ContinuousGraph:
    """Build a named graph family; fixed families may omit ``n``."""
    if family not in FAMILIES:
        raise ValueError(f"unsupported family {family!r}; choose from {sorted(FAMILIES)}")
    if n is None:
        if family not in _FIXED_FAMILY_SIZES:
            raise ValueError(f"family {family!r} requires n")
        n = _FIXED_FAMILY_SIZES[family]
    return FAMILIES[family](n)
