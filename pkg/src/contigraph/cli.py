"""Command-line front end.

Exit codes: 0 success/verified, 1 violated/infeasible, 2 usage error,
3 resource cap hit.  Node caps are configurable through the
CONTIGRAPH_NODE_CAP environment variable.  There is no --seed: no solver
path uses randomness, and byte-identical inputs give byte-identical
outputs.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from pathlib import Path

import click

from contigraph import baselines, brambles, coloring, covering, files, packing, reports
from contigraph.core import FAMILIES, generate
from contigraph.packing import CERT_BOUND

EXIT_VIOLATED = 1
EXIT_RESOURCE = 3


def _read_graph(path: str):
    try:
        return files.parse_graph(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"graph file {path}: {exc}")


def _radius(text: str) -> Fraction:
    try:
        r = files.parse_rational(text)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if r <= 0:
        raise click.UsageError("radius must be positive")
    return r


def _n_range(text: str) -> tuple[int, ...]:
    try:
        if ".." in text:
            lo, _, hi = text.partition("..")
            return tuple(range(int(lo), int(hi) + 1))
        return (int(text),)
    except ValueError:
        raise click.UsageError(f"bad n-range {text!r}; use 'a..b' or a single integer")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _emit_report(report: reports.ExperimentReport, csv_path: str | None) -> None:
    if csv_path:
        report.write_csv(csv_path)
        click.echo(f"wrote {csv_path}")
    else:
        click.echo(report.to_table(), nl=False)


def _echo_refinement(g, r: Fraction, grid_denom: int | None, levels: int, solver) -> None:
    from contigraph.grids import default_denominator, refinement_stable

    D = grid_denom or default_denominator(r)
    stable = refinement_stable(g, r, solver, D, levels)
    click.echo(f"refinement_stable(x{levels})={'yes' if stable else 'no'}", err=True)


@click.group()
def main() -> None:
    """Exact solvers for packing, covering, colouring and brambles on
    continuous graphs."""


@main.command()
@click.option("--family", required=True, type=click.Choice(sorted(FAMILIES)))
@click.option("--n", type=int, default=None, help="Endpoint count (fixed families may omit it).")
@click.option("--out", "-o", default=None, help="Output file (default stdout).")
def gen(family: str, n: int | None, out: str | None) -> None:
    """Generate a graph family as a graph file."""
    try:
        g = generate(family, n)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _emit(files.format_graph(g), out)


@main.group()
def solve() -> None:
    """Solve packing, covering, or colouring instances."""


@solve.command("indep")
@click.option("--graph", "graph_path", required=True)
@click.option("--r", "radius_text", required=True, help="Radius as a/b or integer.")
@click.option("--grid-denom", type=int, default=None, help="Grid denominator (default 2b).")
@click.option("--refine", type=int, default=0, help="Also check value stability on doubled grids.")
@click.option("--method", type=click.Choice(["exact", "greedy", "matching"]), default="exact")
@click.option("--out", "-o", default=None)
def solve_indep(graph_path, radius_text, grid_denom, refine, method, out) -> None:
    """Maximum r-independent set (grid-exact or constructive)."""
    g = _read_graph(graph_path)
    r = _radius(radius_text)
    if method == "exact":
        sol = packing.max_packing_grid_exact(g, r, grid_denom)
    elif method == "greedy":
        if r > Fraction(1, 2):
            raise click.UsageError("greedy placement requires r <= 1/2")
        sol = packing.greedy_edge_placement(g, r)
    else:
        if r != 1:
            raise click.UsageError("matching midpoints form a packing for r=1 only")
        sol = packing.matching_midpoints(g)
    _emit(files.format_point_solution(sol.radius, sol.certificate_kind, sol.points), out)
    suffix = f" D={sol.grid_denominator}" if sol.grid_denominator else ""
    if sol.upper_bound is not None:
        suffix += f" upper_bound={sol.upper_bound}"
    click.echo(f"value={sol.value} kind={sol.certificate_kind}{suffix}", err=True)
    if refine and method == "exact":
        _echo_refinement(g, r, grid_denom, refine, covering.alpha1_grid_value)
    if sol.certificate_kind == CERT_BOUND:
        sys.exit(EXIT_RESOURCE)


@solve.command("cover")
@click.option("--graph", "graph_path", required=True)
@click.option("--r", "radius_text", required=True)
@click.option("--grid-denom", type=int, default=None)
@click.option("--refine", type=int, default=0, help="Also check value stability on doubled grids.")
@click.option("--method", type=click.Choice(["exact", "matching"]), default="exact")
@click.option("--out", "-o", default=None)
def solve_cover(graph_path, radius_text, grid_denom, refine, method, out) -> None:
    """Minimum r-cover (grid-exact or matching-midpoint construction)."""
    g = _read_graph(graph_path)
    r = _radius(radius_text)
    if method == "exact":
        try:
            sol = covering.min_cover_grid_exact(g, r, grid_denom)
        except covering.UncoverablePointError as exc:
            click.echo(f"infeasible: {exc}", err=True)
            sys.exit(EXIT_VIOLATED)
    else:
        if r != 1:
            raise click.UsageError("matching midpoints form a cover for r=1 only")
        outcome = covering.matching_midpoint_cover(g)
        if not outcome.covered:
            e, lo, hi = outcome.gaps[0]
            click.echo(
                f"matching midpoints do not cover: edge {e} uncovered on ({lo}, {hi})",
                err=True,
            )
            sys.exit(EXIT_VIOLATED)
        sol = outcome.solution
    _emit(files.format_point_solution(sol.radius, sol.certificate_kind, sol.centers), out)
    suffix = f" D={sol.grid_denominator}" if sol.grid_denominator else ""
    if sol.lower_bound is not None:
        suffix += f" lower_bound={sol.lower_bound}"
    click.echo(f"value={sol.value} kind={sol.certificate_kind}{suffix}", err=True)
    if refine and method == "exact":
        _echo_refinement(g, r, grid_denom, refine, covering.beta1_grid_value)
    if sol.certificate_kind == CERT_BOUND:
        sys.exit(EXIT_RESOURCE)


@solve.command("color")
@click.option("--graph", "graph_path", required=True)
@click.option("--grid-denom", type=int, default=4)
@click.option("--refine", type=int, default=0, help="Also check value stability on doubled grids.")
@click.option("--max-colors", type=int, default=4)
@click.option("--budget", type=int, default=None, help="Max cover size (default 2m).")
@click.option("--node-cap", type=int, default=None)
@click.option("--out", "-o", default=None)
def solve_color(graph_path, grid_denom, refine, max_colors, budget, node_cap, out) -> None:
    """Smallest c such that some grid cover admits a (1/2, c)-colouring."""
    g = _read_graph(graph_path)
    try:
        result = coloring.min_colors_exact(g, grid_denom, max_colors, budget, node_cap)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    click.echo(f"colors={result.summary()}", err=True)
    for attempt in result.attempts:
        status = "witness" if attempt.found else ("exhausted" if attempt.complete else "truncated")
        click.echo(f"  c={attempt.colors}: {status}", err=True)
    if result.witness is not None:
        _emit(files.format_colored_cover(result.witness), out)
    if refine:
        def chi_value(gg, _rr, dd):
            return coloring.min_colors_exact(gg, dd, max_colors, budget, node_cap).value

        _echo_refinement(g, Fraction(1, 2), grid_denom, refine, chi_value)
    if result.value is None and not all(a.complete for a in result.attempts):
        sys.exit(EXIT_RESOURCE)


@main.group()
def bramble() -> None:
    """Check, hit, and maximize r-brambles."""


@bramble.command("check")
@click.option("--graph", "graph_path", required=True)
@click.option("--r", "radius_text", required=True)
@click.option("--subtrees", "subtrees_path", required=True)
def bramble_check(graph_path, radius_text, subtrees_path) -> None:
    """Validate a subtree family as an r-bramble."""
    r = _radius(radius_text)
    try:
        ok, message = reports.verify_solution_file("bramble", graph_path, subtrees_path, r)
    except (OSError, ValueError) as exc:
        raise click.UsageError(str(exc))
    click.echo(message)
    if not ok:
        sys.exit(EXIT_VIOLATED)


@bramble.command("order")
@click.option("--graph", "graph_path", required=True)
@click.option("--subtrees", "subtrees_path", required=True)
@click.option("--grid-denom", type=int, default=2)
def bramble_order_cmd(graph_path, subtrees_path, grid_denom) -> None:
    """Minimum hitting set size of a subtree family."""
    g = _read_graph(graph_path)
    try:
        subtrees = files.parse_subtrees(g, Path(subtrees_path).read_text())
    except (OSError, ValueError) as exc:
        raise click.UsageError(f"subtree file {subtrees_path}: {exc}")
    res = brambles.bramble_order(g, subtrees, grid_denom)
    hitters = ", ".join(files.format_point(p) for p in res.hitters)
    click.echo(f"order={res.value} hitters=[{hitters}]")
    if not res.optimal:
        click.echo(f"node cap hit; lower_bound={res.lower_bound}", err=True)
        sys.exit(EXIT_RESOURCE)


@bramble.command("number")
@click.option("--graph", "graph_path", required=True)
@click.option("--r", "radius_text", required=True)
@click.option("--grid-denom", type=int, default=2)
@click.option("--max-subtrees", type=int, default=3)
@click.option("--max-segments", type=int, default=1)
@click.option("--compare", is_flag=True, help="Also print the combinatorial comparison table.")
def bramble_number_cmd(graph_path, radius_text, grid_denom, max_subtrees, max_segments, compare) -> None:
    """Brute-force r-bramble number over grid-aligned subtrees (tiny instances)."""
    g = _read_graph(graph_path)
    r = _radius(radius_text)
    res = brambles.r_bramble_number_bruteforce(g, r, grid_denom, max_subtrees, max_segments)
    click.echo(
        f"r_bramble_number={res.value} (grid-certified at D={grid_denom}, "
        f"subtrees<={max_subtrees}, segments<={max_segments}; "
        f"{res.subtree_count} candidate subtrees)"
    )
    if compare:
        G = baselines.from_continuous(g)
        click.echo(f"combinatorial treewidth={baselines.treewidth_exact(G)}")
        click.echo(f"combinatorial bramble number={baselines.bramble_number_exact(G, max_sets=max(4, max_subtrees))}")
    if not res.complete:
        sys.exit(EXIT_RESOURCE)


@main.group()
def baseline() -> None:
    """Exact classic solvers on the combinatorial endpoint graph."""


def _baseline_graph(graph_path: str) -> baselines.CombinatorialGraph:
    return baselines.from_continuous(_read_graph(graph_path))


@baseline.command("alpha")
@click.option("--graph", "graph_path", required=True)
def baseline_alpha(graph_path) -> None:
    """Maximum independent set size."""
    click.echo(str(baselines.alpha_exact(_baseline_graph(graph_path))))


@baseline.command("beta")
@click.option("--graph", "graph_path", required=True)
def baseline_beta(graph_path) -> None:
    """Minimum vertex cover size."""
    click.echo(str(baselines.beta_exact(_baseline_graph(graph_path))))


@baseline.command("chi")
@click.option("--graph", "graph_path", required=True)
def baseline_chi(graph_path) -> None:
    """Chromatic number."""
    click.echo(str(baselines.chi_exact(_baseline_graph(graph_path))))


@baseline.command("matching")
@click.option("--graph", "graph_path", required=True)
def baseline_matching(graph_path) -> None:
    """Maximum matching (one edge per line)."""
    matching = baselines.max_matching(_baseline_graph(graph_path))
    click.echo(f"size={len(matching)}")
    for u, v in matching:
        click.echo(f"{u} {v}")


@baseline.command("treewidth")
@click.option("--graph", "graph_path", required=True)
def baseline_treewidth(graph_path) -> None:
    """Exact treewidth (n <= 10)."""
    try:
        click.echo(str(baselines.treewidth_exact(_baseline_graph(graph_path))))
    except ValueError as exc:
        raise click.UsageError(str(exc))


@main.group()
def report() -> None:
    """Reproducible experiment tables (aligned text or CSV)."""


@report.command("gap")
@click.option("--family", required=True, type=click.Choice(sorted(FAMILIES)))
@click.option("--n-range", "n_range_text", required=True)
@click.option("--grid-denom", type=int, default=2)
@click.option("--csv", "csv_path", default=None)
def report_gap(family, n_range_text, grid_denom, csv_path) -> None:
    """alpha/alpha1 and beta/beta1 relaxation gaps."""
    _emit_report(reports.gap_report(family, _n_range(n_range_text), grid_denom), csv_path)


@report.command("duality")
@click.option("--family", required=True, type=click.Choice(sorted(FAMILIES)))
@click.option("--n-range", "n_range_text", required=True)
@click.option("--grid-denom", type=int, default=2)
@click.option("--radii", default=None, help="Comma-separated radii: emit alpha_r+beta_r sums instead.")
@click.option("--csv", "csv_path", default=None)
def report_duality(family, n_range_text, grid_denom, radii, csv_path) -> None:
    """alpha1+beta1=n duality checks, or measured alpha_r+beta_r sums."""
    ns = _n_range(n_range_text)
    if radii:
        radius_list = tuple(_radius(tok) for tok in radii.split(","))
        _emit_report(reports.sums_table(family, ns, radius_list), csv_path)
    else:
        _emit_report(reports.duality_table(family, ns, grid_denom), csv_path)


@report.command("coloring")
@click.option("--n-range", "n_range_text", required=True)
@click.option("--grid-denom", type=int, default=4)
@click.option("--budget", type=int, default=None)
@click.option("--node-cap", type=int, default=None)
@click.option("--csv", "csv_path", default=None)
def report_coloring(n_range_text, grid_denom, budget, node_cap, csv_path) -> None:
    """Constructive vs grid-exact colour counts on complete graphs."""
    _emit_report(
        reports.coloring_report(_n_range(n_range_text), grid_denom, budget, node_cap),
        csv_path,
    )


@main.command()
@click.option("--kind", required=True, type=click.Choice(["indep", "cover", "color", "bramble"]))
@click.option("--graph", "graph_path", required=True)
@click.option("--solution", "solution_path", required=True)
@click.option("--r", "radius_text", default=None, help="Required for bramble verification.")
def verify(kind, graph_path, solution_path, radius_text) -> None:
    """Verify a solution file exactly; prints the first violated constraint."""
    radius = _radius(radius_text) if radius_text else None
    try:
        ok, message = reports.verify_solution_file(kind, graph_path, solution_path, radius)
    except (OSError, ValueError) as exc:
        raise click.UsageError(str(exc))
    click.echo(message)
    if not ok:
        sys.exit(EXIT_VIOLATED)


if __name__ == "__main__":
    main()
