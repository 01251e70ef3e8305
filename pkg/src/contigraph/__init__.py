"""Exact combinatorial optimization on continuous (metric) graphs.

A continuous graph is a graph whose edges are unit-length continuous
intervals; every interior edge point is a bona fide location.  All
coordinates, radii and distances are exact rationals; no solver path
ever touches floating point (``math.inf`` is the sole non-rational value
and only marks unreachable pairs).
"""

from contigraph.core import (
    INF,
    ContinuousGraph,
    EdgePoint,
    Endpoint,
    InvalidPointError,
    Point,
    generate,
    point_distance,
)

__all__ = [
    "INF",
    "ContinuousGraph",
    "EdgePoint",
    "Endpoint",
    "InvalidPointError",
    "Point",
    "generate",
    "point_distance",
]
