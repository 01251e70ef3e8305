"""Experiment orchestration and report emission.

Reports are plain tables (aligned text and CSV) whose cells are already
exact-formatted strings; given identical flags the bytes are identical
across runs.  Every optimal value carries its certificate kind and grid
denominator.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from contigraph import baselines, brambles, coloring, covering, files, packing
from contigraph.core import ContinuousGraph, generate
from contigraph.grids import default_denominator


@dataclass(frozen=True)
class ExperimentReport:
    title: str
    columns: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]

    def to_csv_text(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_table(self) -> str:
        widths = [len(c) for c in self.columns]
        for row in self.rows:
            for i, cell in enumerate(row):
                widths[i] = max(widths[i], len(cell))
        def fmt(cells: tuple[str, ...]) -> str:
            return "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(cells)).rstrip()
        lines = [self.title, fmt(self.columns)]
        lines.extend(fmt(row) for row in self.rows)
        return "\n".join(lines) + "\n"

    def write_csv(self, path: Path | str) -> None:
        Path(path).write_text(self.to_csv_text())


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def gap_report(family: str, ns: tuple[int, ...], denominator: int = 2) -> ExperimentReport:
    """Per-instance relaxation gaps: alpha vs alpha_1 and beta vs beta_1."""
    rows = []
    one = Fraction(1)
    for n in ns:
        g = generate(family, n)
        G = baselines.from_continuous(g)
        alpha = baselines.alpha_exact(G)
        beta = baselines.beta_exact(G)
        alpha1 = covering.alpha1_grid_value(g, one, denominator)
        beta1 = covering.beta1_grid_value(g, one, denominator)
        rows.append(
            (
                family,
                str(n),
                str(alpha),
                str(alpha1),
                files.format_rational(Fraction(alpha1, alpha)),
                str(beta),
                str(beta1),
                files.format_rational(Fraction(beta, beta1)) if beta1 else "-",
                _yes_no(alpha1 + beta1 == n),
            )
        )
    return ExperimentReport(
        f"relaxation gaps for {family} (grid-certified at D={denominator})",
        ("family", "n", "alpha", "alpha1", "alpha1/alpha", "beta", "beta1", "beta/beta1", "duality"),
        tuple(rows),
    )


def duality_table(family: str, ns: tuple[int, ...], denominator: int = 2) -> ExperimentReport:
    rows = []
    for n in ns:
        g = generate(family, n)
        rec = covering.duality_report(g, denominator)
        rows.append(
            (
                str(n),
                str(rec.alpha1),
                str(rec.beta1),
                str(rec.alpha1 + rec.beta1),
                _yes_no(rec.holds),
                _yes_no(rec.alpha_refinement_stable),
                _yes_no(rec.beta_refinement_stable),
            )
        )
    return ExperimentReport(
        f"alpha1+beta1 duality for {family} (grid-certified at D={denominator}, refinement x2)",
        ("n", "alpha1", "beta1", "sum", "holds", "alpha_stable", "beta_stable"),
        tuple(rows),
    )


def sums_table(family: str, ns: tuple[int, ...], radii: tuple[Fraction, ...]) -> ExperimentReport:
    """Measured alpha_r + beta_r sums; raw evidence, no bound asserted."""
    rows = []
    for n in ns:
        g = generate(family, n)
        for r in radii:
            D = default_denominator(r)
            alpha_r = packing.max_packing_grid_exact(g, r).value
            beta_r = covering.min_cover_grid_exact(g, r).value
            rows.append(
                (
                    family,
                    str(n),
                    files.format_rational(r),
                    str(D),
                    str(alpha_r),
                    str(beta_r),
                    str(alpha_r + beta_r),
                )
            )
    return ExperimentReport(
        f"measured alpha_r + beta_r for {family} (grid-certified at default D per radius)",
        ("family", "n", "r", "D", "alpha_r", "beta_r", "sum"),
        tuple(rows),
    )


def coloring_report(
    ns: tuple[int, ...],
    denominator: int = 4,
    center_budget: int | None = None,
    node_cap: int | None = None,
) -> ExperimentReport:
    """Constructive vs grid-exact half-radius colour counts on complete graphs."""
    rows = []
    for n in ns:
        cc = coloring.kn_half_coloring(n)
        g = generate("complete", n)
        result = coloring.min_colors_exact(
            g, denominator, (n + 1) // 2, center_budget, node_cap
        )
        grid_value = str(result.value) if result.value is not None else result.summary()
        exactness = "exact" if result.exact and result.value is not None else result.summary()
        rows.append((str(n), str(cc.colors_used), grid_value, exactness))
    return ExperimentReport(
        f"half-radius colouring of complete graphs (grid D={denominator})",
        ("n", "prop2_colors", "grid_exact_colors", "certificate"),
        tuple(rows),
    )


def bramble_comparison(
    instances: tuple[tuple[str, int], ...] = (("cycle", 3), ("complete", 4)),
    denominator: int = 1,
    max_subtrees: int = 4,
    max_segments: int = 1,
) -> ExperimentReport:
    """Combinatorial treewidth, combinatorial bramble number and the
    continuous 1-bramble number side by side; no sign convention asserted."""
    rows = []
    for family, n in instances:
        g = generate(family, n)
        G = baselines.from_continuous(g)
        tw = baselines.treewidth_exact(G)
        bn = baselines.bramble_number_exact(G, max_sets=max_subtrees)
        cont = brambles.r_bramble_number_bruteforce(
            g, Fraction(1), denominator, max_subtrees, max_segments
        )
        rows.append(
            (
                f"{family}-{n}",
                str(tw),
                str(bn),
                str(cont.value),
                f"D={denominator},subtrees<={max_subtrees},segments<={max_segments}",
            )
        )
    return ExperimentReport(
        "treewidth and bramble numbers, combinatorial vs continuous",
        ("graph", "treewidth", "bramble_number", "one_bramble_continuous", "caps"),
        tuple(rows),
    )


def emit_figures_data(reports: tuple[ExperimentReport, ...], directory: Path | str) -> list[Path]:
    """One stable, diffable CSV file per report."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for report in reports:
        slug = re.sub(r"[^a-z0-9]+", "_", report.title.lower()).strip("_")[:60]
        path = directory / f"{slug}.csv"
        report.write_csv(path)
        paths.append(path)
    return paths


# ---------------------------------------------------------------------------
# Solution-file verification


def verify_solution_file(
    kind: str,
    graph_path: Path | str,
    solution_path: Path | str,
    radius: Fraction | None = None,
) -> tuple[bool, str]:
    """Dispatches to the exact validity check for the solution kind.

    Returns (ok, message); the message names the first violated
    constraint on failure.
    """
    g = files.parse_graph(Path(graph_path).read_text())
    text = Path(solution_path).read_text()
    if kind == "indep":
        parsed = files.parse_point_solution(g, text)
        violation = packing.packing_violation(g, parsed.radius, parsed.points)
        if violation is None:
            return True, f"valid packing of {len(parsed.points)} points at r={parsed.radius}"
        return False, violation
    if kind == "cover":
        parsed = files.parse_point_solution(g, text)
        violation = covering.cover_violation(g, parsed.radius, parsed.points)
        if violation is None:
            return True, f"valid cover of {len(parsed.points)} balls at r={parsed.radius}"
        return False, violation
    if kind == "color":
        cc = files.parse_colored_cover(g, text)
        violation = coloring.coloring_violation(g, cc)
        if violation is None:
            return True, f"valid colouring with {cc.colors_used} colours"
        return False, violation
    if kind == "bramble":
        if radius is None:
            raise ValueError("bramble verification needs a radius")
        subtrees = files.parse_subtrees(g, text)
        for i, t in enumerate(subtrees):
            if not brambles.subtree_valid(g, t):
                return False, f"subtree {i} is not connected and cycle-free"
        if brambles.is_r_bramble(g, radius, subtrees):
            return True, f"valid {radius}-bramble of {len(subtrees)} subtrees"
        return False, "some pair of subtrees is farther apart than r"
    raise ValueError(f"unknown solution kind {kind!r}")
