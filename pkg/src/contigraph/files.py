"""Plain-text file formats shared by the CLI and the test harness.

Graph file: first line ``n m``, then m lines ``u v`` (0-based ids).
Point literal: ``v <id>`` or ``e <edge-index> <num>/<den>``.
Packing/cover solution: header ``# r=a/b value=V kind=K`` plus one point
literal per line.  Coloured cover: header ``# r=1/2 colors=c`` plus lines
``<point-literal> <color>``.  Subtree file: one subtree per line,
``;``-separated items ``v <id>`` or ``e <idx> <lo> <hi>``.

Radii and offsets parse strictly as ``a/b`` or integer; decimals are
rejected to keep the exactness contract.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from contigraph.brambles import Subtree, make_subtree
from contigraph.coloring import ColoredCover
from contigraph.core import ContinuousGraph, Point, format_point, point_on_edge
from contigraph.covering import CoverSolution, make_cover_solution
from contigraph.packing import PackingSolution, make_packing_solution


class FileFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_rational(text: str) -> Fraction:
    """Strict ``a/b`` or integer; decimal notation is rejected."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad rational {text!r}: {exc}") from None
    try:
        return Fraction(int(text))
    except ValueError:
        raise ValueError(f"bad rational {text!r} (decimals are not accepted)") from None


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def _header_fields(text: str) -> dict[str, str]:
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            fields = {}
            for token in line[1:].split():
                if "=" in token:
                    key, _, value = token.partition("=")
                    fields[key] = value
            return fields
    return {}


# ---------------------------------------------------------------------------
# Graphs


def parse_graph(text: str) -> ContinuousGraph:
    lines = _content_lines(text)
    if not lines:
        raise FileFormatError(1, "empty graph file")
    line_no, head = lines[0]
    parts = head.split()
    if len(parts) != 2:
        raise FileFormatError(line_no, f"expected 'n m', got {head!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise FileFormatError(line_no, f"expected integers 'n m', got {head!r}") from None
    edges = []
    if len(lines) - 1 != m:
        raise FileFormatError(line_no, f"declared {m} edges, found {len(lines) - 1}")
    for line_no, line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FileFormatError(line_no, f"expected 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FileFormatError(line_no, f"expected integer ids, got {line!r}") from None
    try:
        return ContinuousGraph(n, tuple(edges))
    except ValueError as exc:
        raise FileFormatError(lines[0][0], str(exc)) from None


def format_graph(g: ContinuousGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Points


def parse_point_tokens(g: ContinuousGraph, tokens: list[str], line_no: int) -> tuple[Point, list[str]]:
    """Parse one point literal from the front of ``tokens``; returns the
    point and the remaining tokens."""
    if not tokens:
        raise FileFormatError(line_no, "expected a point literal")
    kind = tokens[0]
    try:
        if kind == "v":
            if len(tokens) < 2:
                raise ValueError("'v' needs an endpoint id")
            pid = int(tokens[1])
            if not 0 <= pid < g.n:
                raise ValueError(f"endpoint {pid} out of range")
            from contigraph.core import Endpoint

            return Endpoint(pid), tokens[2:]
        if kind == "e":
            if len(tokens) < 3:
                raise ValueError("'e' needs an edge index and an offset")
            edge = int(tokens[1])
            offset = parse_rational(tokens[2])
            return point_on_edge(g, edge, offset), tokens[3:]
        raise ValueError(f"unknown point kind {kind!r}")
    except ValueError as exc:
        raise FileFormatError(line_no, str(exc)) from None


def parse_point(g: ContinuousGraph, text: str, line_no: int = 1) -> Point:
    point, rest = parse_point_tokens(g, text.split(), line_no)
    if rest:
        raise FileFormatError(line_no, f"trailing tokens {rest!r} after point literal")
    return point


# ---------------------------------------------------------------------------
# Packing / cover solution files


@dataclass(frozen=True)
class ParsedPointSolution:
    radius: Fraction
    kind: str
    declared_value: int | None
    points: tuple[Point, ...]


def format_point_solution(radius: Fraction, kind: str, points: tuple[Point, ...]) -> str:
    lines = [f"# r={format_rational(radius)} value={len(points)} kind={kind}"]
    lines.extend(format_point(p) for p in points)
    return "\n".join(lines) + "\n"


def parse_point_solution(g: ContinuousGraph, text: str) -> ParsedPointSolution:
    fields = _header_fields(text)
    if "r" not in fields:
        raise FileFormatError(1, "missing '# r=... value=... kind=...' header")
    radius = parse_rational(fields["r"])
    kind = fields.get("kind", "unknown")
    declared = int(fields["value"]) if "value" in fields else None
    points = tuple(parse_point(g, line, line_no) for line_no, line in _content_lines(text))
    return ParsedPointSolution(radius, kind, declared, points)


def load_packing_solution(g: ContinuousGraph, text: str) -> PackingSolution:
    """Parse and verify; raises ValueError on an invalid packing."""
    parsed = parse_point_solution(g, text)
    return make_packing_solution(g, parsed.radius, parsed.points, parsed.kind)


def load_cover_solution(g: ContinuousGraph, text: str) -> CoverSolution:
    """Parse and verify; raises ValueError on an invalid cover."""
    parsed = parse_point_solution(g, text)
    return make_cover_solution(g, parsed.radius, parsed.points, parsed.kind)


# ---------------------------------------------------------------------------
# Coloured covers


def format_colored_cover(cc: ColoredCover) -> str:
    lines = [f"# r={format_rational(cc.radius)} colors={cc.colors_used}"]
    lines.extend(f"{format_point(p)} {color}" for p, color in cc.entries)
    return "\n".join(lines) + "\n"


def parse_colored_cover(g: ContinuousGraph, text: str) -> ColoredCover:
    entries = []
    for line_no, line in _content_lines(text):
        tokens = line.split()
        point, rest = parse_point_tokens(g, tokens, line_no)
        if len(rest) != 1:
            raise FileFormatError(line_no, f"expected '<point> <color>', got {line!r}")
        try:
            color = int(rest[0])
        except ValueError:
            raise FileFormatError(line_no, f"bad colour {rest[0]!r}") from None
        entries.append((point, color))
    return ColoredCover(tuple(entries))


# ---------------------------------------------------------------------------
# Subtree files


def format_subtrees(subtrees: tuple[Subtree, ...]) -> str:
    lines = []
    for t in subtrees:
        items = [f"v {v}" for v in sorted(t.vertices)]
        items.extend(
            f"e {e} {format_rational(lo)} {format_rational(hi)}" for e, lo, hi in t.segments
        )
        lines.append("; ".join(items))
    return "\n".join(lines) + "\n"


def parse_subtrees(g: ContinuousGraph, text: str) -> tuple[Subtree, ...]:
    out = []
    for line_no, line in _content_lines(text):
        vertices: list[int] = []
        segments = []
        for item in line.split(";"):
            tokens = item.split()
            if not tokens:
                continue
            if tokens[0] == "v" and len(tokens) == 2:
                try:
                    vertices.append(int(tokens[1]))
                except ValueError:
                    raise FileFormatError(line_no, f"bad vertex {tokens[1]!r}") from None
            elif tokens[0] == "e" and len(tokens) == 4:
                try:
                    segments.append(
                        (int(tokens[1]), parse_rational(tokens[2]), parse_rational(tokens[3]))
                    )
                except ValueError as exc:
                    raise FileFormatError(line_no, str(exc)) from None
            else:
                raise FileFormatError(line_no, f"bad subtree item {item.strip()!r}")
        try:
            out.append(make_subtree(g, tuple(vertices), tuple(segments)))
        except ValueError as exc:
            raise FileFormatError(line_no, str(exc)) from None
    return tuple(out)
