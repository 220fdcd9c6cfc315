"""
heapkit CLI Main Entry Point

Full heaps over affine Dynkin diagrams: catalog, rendering, ideal enumeration,
root heaps, folding and the verification suites.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage errors.
"""

from __future__ import annotations

import csv
import io
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

import orjson
import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from heapkit.catalog import (
    DEFAULT_KEYS,
    CatalogKey,
    Family,
    build,
    enumerate_height_zero_ideals,
    expected_ideal_count,
    freeze,
    synthesize_full_heaps,
)
from heapkit.cartan import DynkinDiagram, RootVector, parse_diagram, require_full_heap_possible
from heapkit.config import HeapkitConfig, get_config
from heapkit.core.errors import HeapkitError, NoFullHeap, SearchBudgetExceeded, UnsupportedFormat
from heapkit.core.logging_config import LogLevel, get_logger, setup_logging
from heapkit.core.reports import VerificationReport
from heapkit.heap import PeriodicHeap, heap_to_json, render_dot, render_text, verify_axioms
from heapkit.rep import RepresentationSpace

app = typer.Typer(
    name="heapkit",
    help="heapkit - Full heaps over affine Dynkin diagrams and their representations",
    add_completion=False,
    rich_markup_mode="rich",
)
console = Console()
err_console = Console(stderr=True)
log = get_logger(__name__)

# Sub-command groups
catalog_app = typer.Typer(help="Catalog commands - Browse, synthesize and freeze full heaps")
ideals_app = typer.Typer(help="Ideal commands - Count and list height-zero ideals")
roots_app = typer.Typer(help="Root commands - Positive roots and their root heaps")

app.add_typer(catalog_app, name="catalog")
app.add_typer(ideals_app, name="ideals")
app.add_typer(roots_app, name="roots")

SUITES = ("axioms", "relations", "chevalley", "crystal", "weyl", "quantum")

FORMATS: dict[str, tuple[str, ...]] = {
    "catalog list": ("text", "json", "csv"),
    "catalog show": ("text", "json", "dot"),
    "catalog synth": ("text", "json"),
    "verify": ("text", "json"),
    "ideals": ("text", "json", "csv"),
    "roots": ("text", "json", "csv"),
    "fold": ("text", "json"),
    "render heap": ("text", "json", "dot"),
    "render crystal": ("json", "dot"),
    "render chevalley": ("csv", "json"),
}


# =============================================================================
# Shared options and helpers
# =============================================================================


class UsageError(HeapkitError):
    """Bad flags; reported on stderr with exit code 2."""


FamilyOpt = typer.Option("E6", "--family", "-f", help="Catalog family or diagram name")
RankOpt = typer.Option(0, "--rank", "-r", help="Rank l (ignored for A1_nat, E6, E7)")
VariantOpt = typer.Option(None, "--variant", help="plain/twisted (D_spin), heap/dual (E6)")
WindowOpt = typer.Option(None, "--window", "-k", help="Window periods k (default from config)")
OrientationOpt = typer.Option(
    None, "--orientation", help="Arrows as 'p>q,...' overriding the default orientation"
)
FormatOpt = typer.Option(None, "--format", help="Output format: text, json, dot, csv")
OutOpt = typer.Option(None, "--out", "-o", help="Write output to a file")
SeedOpt = typer.Option(None, "--seed", help="Seed for sampled suites (default from config)")
VerboseOpt = typer.Option(False, "--verbose", "-v", help="Debug logging")


def _configure(verbose: bool) -> HeapkitConfig:
    config = get_config()
    log_config = config.log_config()
    if verbose:
        log_config.console_level = LogLevel.DEBUG
    setup_logging(log_config)
    return config


def _fail_usage(message: str) -> None:
    err_console.print(f"[red]{message}[/red]")
    raise typer.Exit(2)


def _format(command: str, requested: str | None, config: HeapkitConfig) -> str:
    allowed = FORMATS[command]
    fmt = requested or config.output.default_format
    if requested is None and fmt not in allowed:
        fmt = allowed[0]
    if fmt not in allowed:
        raise UnsupportedFormat(f"{command} supports {', '.join(allowed)}, not {fmt!r}")
    return fmt


def _window(requested: int | None, config: HeapkitConfig) -> int:
    k = config.window if requested is None else requested
    if k < 1:
        raise UsageError(f"--window must be >= 1, got {k}")
    return k


def _emit(payload: str | bytes, out: Path | None) -> None:
    """Write to --out or stdout, byte for byte."""
    data = payload.encode() if isinstance(payload, str) else payload
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_bytes(data)
        err_console.print(f"[green]Wrote {out}[/green]")
        return
    sys.stdout.write(data.decode())
    sys.stdout.flush()


def _json(data: Any) -> bytes:
    return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS) + b"\n"


def _csv(rows: Sequence[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _render_table(table: Table) -> str:
    buffer = Console(file=io.StringIO(), width=120, color_system=None)
    buffer.print(table)
    return buffer.file.getvalue()  # type: ignore[attr-defined]


def resolve_key(family: str, rank: int = 0, variant: str | None = None) -> CatalogKey:
    """
    A catalog key from a family name ("D_spin") or a diagram name ("E7affine", "C3^(1)").

    Diagram names over which no full heap exists raise NoFullHeap.
    """
    try:
        return CatalogKey(Family(family), rank, variant)
    except ValueError as e:
        if family in {f.value for f in Family}:
            raise UsageError(str(e)) from e
    try:
        diagram = parse_diagram(family)
    except ValueError as e:
        raise UsageError(f"Unknown family or diagram {family!r}") from e
    require_full_heap_possible(diagram)
    for fam in Family:
        for size in range(1, diagram.n + 1):
            try:
                key = CatalogKey(fam, size, variant)
            except ValueError:
                continue
            if key.diagram.name == diagram.name:
                return key
    raise UsageError(f"No catalog heap over {diagram.name}")


def parse_orientation(diagram: DynkinDiagram, text: str | None) -> DynkinDiagram | None:
    """'0>1,2>1' -> diagram with those arrows; every listed pair must be an edge."""
    if text is None:
        return None
    arrows = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        head, _, tail = part.partition(">")
        try:
            p, q = int(head), int(tail)
        except ValueError as e:
            raise UsageError(f"Bad arrow {part!r}; expected 'p>q'") from e
        if not diagram.cartan.adjacent(p, q):
            raise UsageError(f"{p} and {q} are not adjacent in {diagram.name}")
        arrows.append((p, q))
    return diagram.with_orientation(arrows)


def parse_root(text: str) -> RootVector:
    try:
        return RootVector.of(int(c) for c in text.replace(" ", "").split(","))
    except ValueError as e:
        raise UsageError(f"Bad root {text!r}; expected comma-separated integers") from e


def _guarded(body: Callable[[], int | None]) -> None:
    """Run a command body, mapping library errors to exit codes."""
    try:
        code = body()
    except NoFullHeap as e:
        err_console.print(f"[red]{e}[/red]")
        raise typer.Exit(2) from e
    except (UsageError, UnsupportedFormat) as e:
        _fail_usage(str(e))
    except HeapkitError as e:
        err_console.print(f"[red]{type(e).__name__}: {e}[/red]")
        raise typer.Exit(2) from e
    else:
        if code:
            raise typer.Exit(code)


# =============================================================================
# Catalog Commands
# =============================================================================


@catalog_app.command("list")
def catalog_list(
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """List catalog heaps with motif sizes and height-zero ideal counts."""

    def body() -> None:
        config = _configure(verbose)
        fmt = _format("catalog list", format_, config)
        rows = []
        for key in DEFAULT_KEYS:
            heap = build(key)
            rows.append(
                {
                    "key": key.slug,
                    "family": key.family.value,
                    "rank": key.rank,
                    "variant": key.variant,
                    "diagram": heap.diagram.name,
                    "motif": heap.size,
                    "ideals": len(enumerate_height_zero_ideals(heap)),
                    "expected": expected_ideal_count(key),
                }
            )
        if fmt == "json":
            _emit(_json(rows), out)
        elif fmt == "csv":
            header = list(rows[0])
            _emit(_csv([header] + [[r[h] for h in header] for r in rows]), out)
        else:
            table = Table(title="Full heap catalog")
            table.add_column("Key", style="cyan")
            table.add_column("Diagram", style="yellow")
            table.add_column("Motif", justify="right")
            table.add_column("Ideals", justify="right", style="green")
            for r in rows:
                table.add_row(r["key"], r["diagram"], str(r["motif"]), str(r["ideals"]))
            _emit(_render_table(table), out)

    _guarded(body)


@catalog_app.command("show")
def catalog_show(
    family: str = FamilyOpt,
    rank: int = RankOpt,
    variant: str | None = VariantOpt,
    window: int | None = typer.Option(1, "--window", "-k", help="Window periods k"),
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Show one catalog heap: motif word, period and a window."""

    def body() -> None:
        config = _configure(verbose)
        fmt = _format("catalog show", format_, config)
        k = _window(window, config)
        key = resolve_key(family, rank, variant)
        heap = build(key)
        if fmt == "json":
            _emit(heap_to_json(heap), out)
        elif fmt == "dot":
            _emit(render_dot(heap, k), out)
        else:
            if out is None:
                console.print(
                    Panel.fit(
                        f"[bold cyan]{key.slug}[/bold cyan] over {heap.diagram.name}\n"
                        f"motif word {' '.join(map(str, heap.word()))}\n"
                        f"period {heap.period}",
                        border_style="cyan",
                    )
                )
            _emit(render_text(heap, k), out)

    _guarded(body)


@catalog_app.command("synth")
def catalog_synth(
    family: str = typer.Option(..., "--family", "-f", help="Affine diagram name, e.g. E6affine"),
    max_solutions: int | None = typer.Option(None, "--max", help="Stop after this many classes"),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Search threads"),
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Search for all full heaps over a diagram, one per isomorphism class."""

    def body() -> int:
        config = _configure(verbose)
        fmt = _format("catalog synth", format_, config)
        try:
            diagram = parse_diagram(family)
        except ValueError as e:
            raise UsageError(str(e)) from e
        synth_config = config.synthesis
        if workers is not None:
            synth_config = synth_config.model_copy(update={"workers": workers})
        complete = True
        try:
            heaps = synthesize_full_heaps(diagram, max_solutions, synth_config)
        except SearchBudgetExceeded as e:
            heaps = e.partial or []
            complete = False
            log.warning(f"Search budget exhausted: {len(heaps)} classes found so far")
        words = [list(h.word()) for h in heaps]
        if fmt == "json":
            _emit(_json({"diagram": diagram.name, "classes": words, "complete": complete}), out)
        else:
            lines = [f"{diagram.name}: {len(words)} classes" + ("" if complete else " (partial)")]
            lines += [" ".join(map(str, w)) for w in words]
            _emit("\n".join(lines) + "\n", out)
        return 0 if complete else 1

    _guarded(body)


@catalog_app.command("freeze")
def catalog_freeze(
    out: Path | None = typer.Option(None, "--out", "-o", help="Fixture directory"),
    verbose: bool = VerboseOpt,
) -> None:
    """Write every catalog heap as a JSON fixture."""

    def body() -> None:
        config = _configure(verbose)
        directory = out or config.output.fixtures_dir
        paths = freeze(directory)
        console.print(f"[green]Froze {len(paths)} heaps into {directory}[/green]")

    _guarded(body)


# =============================================================================
# Verification
# =============================================================================


def _run_suite(
    suite: str,
    heap: PeriodicHeap,
    k: int,
    orientation: DynkinDiagram | None,
    config: HeapkitConfig,
    seed: int,
) -> VerificationReport:
    from heapkit.crystal import (
        build_crystal_graph,
        verify_crystal_axioms,
        verify_cyclicity_sample,
        verify_quantum_relations,
        verify_tl_annihilation,
        verify_weights,
        verify_weyl_relations,
    )
    from heapkit.rep import (
        verify_affine_relations,
        verify_chevalley,
        verify_composition,
        verify_defining_relations,
        verify_maximal_element_cases,
        verify_root_operators,
    )

    space = RepresentationSpace(heap, orientation)
    if suite == "axioms":
        return verify_axioms(heap, k=max(k, 2))
    if suite == "relations":
        report = verify_defining_relations(space)
        report = report.merge(verify_maximal_element_cases(space))
        return report.merge(verify_affine_relations(space), suite="relations")
    if suite == "chevalley":
        _, report = verify_chevalley(space)
        report = report.merge(verify_root_operators(space))
        composition = verify_composition(space, sample_size=config.sample_size, seed=seed)
        return report.merge(composition, suite="chevalley")
    if suite == "crystal":
        graph = build_crystal_graph(space, heights=(-1, 0, 1))
        report = verify_crystal_axioms(graph).merge(verify_weights(space))
        quotient = verify_crystal_axioms(build_crystal_graph(space, quotient=True))
        return report.merge(quotient, suite="crystal")
    if suite == "weyl":
        report = verify_weyl_relations(space).merge(verify_tl_annihilation(space))
        return report.merge(verify_cyclicity_sample(space, pairs=100, seed=seed), suite="weyl")
    if suite == "quantum":
        return verify_quantum_relations(space, sample_size=config.sample_size, seed=seed)
    raise UsageError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")


def wrap_report(report: VerificationReport) -> dict[str, Any]:
    return {
        "suite": report.suite,
        "passed": report.passed,
        "checks": report.checks,
        "failures": [f.to_dict() for f in report.failures],
    }


@app.command()
def verify(
    family: str = FamilyOpt,
    rank: int = RankOpt,
    variant: str | None = VariantOpt,
    suite: str = typer.Option("all", "--suite", "-s", help=f"{', '.join(SUITES)} or all"),
    window: int | None = WindowOpt,
    orientation: str | None = OrientationOpt,
    seed: int | None = SeedOpt,
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Run verification suites on a catalog heap; exit 1 if any check fails."""

    def body() -> int:
        config = _configure(verbose)
        fmt = _format("verify", format_, config)
        k = _window(window, config)
        suites = SUITES if suite == "all" else (suite,)
        if any(s not in SUITES for s in suites):
            raise UsageError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
        key = resolve_key(family, rank, variant)
        heap = build(key)
        arrows = parse_orientation(heap.diagram, orientation)
        run_seed = config.seed if seed is None else seed

        # Suites are independent; results are collected in suite order.
        with ThreadPoolExecutor(max_workers=len(suites)) as executor:
            futures = [
                executor.submit(_run_suite, s, heap, k, arrows, config, run_seed) for s in suites
            ]
            reports = [f.result() for f in futures]
        failed = [r for r in reports if not r.passed]

        if fmt == "json":
            _emit(_json([wrap_report(r) for r in reports]), out)
        else:
            table = Table(title=f"Verification of {key.slug} over {heap.diagram.name}")
            table.add_column("Suite", style="cyan")
            table.add_column("Checks", justify="right")
            table.add_column("Failures", justify="right")
            table.add_column("Skipped", justify="right")
            table.add_column("Status")
            for r in reports:
                status = "[green]PASS[/green]" if r.passed else "[red]FAIL[/red]"
                table.add_row(
                    r.suite, str(r.checks), str(len(r.failures)), str(len(r.skipped)), status
                )
            _emit(_render_table(table), out)
            if failed:
                sys.stdout.write(_json([wrap_report(r) for r in failed]).decode())
        return 1 if failed else 0

    _guarded(body)


# =============================================================================
# Ideals
# =============================================================================


@ideals_app.command("count")
def ideals_count(
    family: str = FamilyOpt,
    rank: int = RankOpt,
    variant: str | None = VariantOpt,
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Count height-zero ideals (phi-orbits of proper ideals)."""

    def body() -> int:
        config = _configure(verbose)
        fmt = _format("ideals", format_, config)
        key = resolve_key(family, rank, variant)
        count = len(enumerate_height_zero_ideals(build(key)))
        expected = expected_ideal_count(key)
        if fmt == "json":
            _emit(_json({"key": key.slug, "count": count, "expected": expected}), out)
        elif fmt == "csv":
            _emit(_csv([["key", "count", "expected"], [key.slug, count, expected]]), out)
        else:
            _emit(f"{key.slug}: {count} height-zero ideals\n", out)
        return 0 if count == expected else 1

    _guarded(body)


@ideals_app.command("list")
def ideals_list(
    family: str = FamilyOpt,
    rank: int = RankOpt,
    variant: str | None = VariantOpt,
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """List height-zero ideals as cut vectors with their weights."""
    from heapkit.crystal import weight

    def body() -> None:
        config = _configure(verbose)
        fmt = _format("ideals", format_, config)
        heap = build(resolve_key(family, rank, variant))
        space = RepresentationSpace(heap)
        cuts = enumerate_height_zero_ideals(heap)
        if fmt == "json":
            rows = [
                {"cut": c.to_json_value(), "weight": weight(space, c).to_json_value()} for c in cuts
            ]
            _emit(_json(rows), out)
        elif fmt == "csv":
            rows_csv = [["cut", "weight"]]
            rows_csv += [[str(c), str(weight(space, c))] for c in cuts]
            _emit(_csv(rows_csv), out)
        else:
            _emit("".join(f"{c}  {weight(space, c)}\n" for c in cuts), out)

    _guarded(body)


# =============================================================================
# Roots
# =============================================================================


@roots_app.command("list")
def roots_list(
    family: str = FamilyOpt,
    rank: int = RankOpt,
    variant: str | None = VariantOpt,
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Positive roots of the finite part, by height."""

    def body() -> None:
        config = _configure(verbose)
        fmt = _format("roots", format_, config)
        space = RepresentationSpace(build(resolve_key(family, rank, variant)))
        roots = space.finite_roots
        if fmt == "json":
            _emit(_json([r.to_json_value() for r in roots]), out)
        elif fmt == "csv":
            _emit(_csv([["root", "height"]] + [[str(r), r.height] for r in roots]), out)
        else:
            _emit("".join(f"{r}  height {r.height}\n" for r in roots), out)

    _guarded(body)


@roots_app.command("heaps")
def roots_heaps(
    family: str = FamilyOpt,
    rank: int = RankOpt,
    variant: str | None = VariantOpt,
    root: str | None = typer.Option(None, "--root", help="Root as 'c0,c1,...' (default: all)"),
    window: int | None = typer.Option(1, "--window", "-k", help="Window periods k"),
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Root heaps (convex subheaps with root character) inside a window."""

    def body() -> None:
        config = _configure(verbose)
        fmt = _format("roots", format_, config)
        k = _window(window, config)
        heap = build(resolve_key(family, rank, variant))
        space = RepresentationSpace(heap)
        roots = [parse_root(root)] if root else list(space.finite_roots)
        win = heap.window(k)
        found = {r: space.find_root_heaps(r, win) for r in roots}
        if fmt == "json":
            rows_json = [
                {"root": r.to_json_value(), "heaps": [h.to_json_value() for h in hs]}
                for r, hs in found.items()
            ]
            _emit(_json(rows_json), out)
        elif fmt == "csv":
            rows: list[list[Any]] = [["root", "below", "elements"]]
            for r, hs in found.items():
                for h in hs:
                    elements = " ".join(f"{p}@{t}" for p, t in h.elements)
                    rows.append([str(r), str(h.below), elements])
            _emit(_csv(rows), out)
        else:
            _emit("".join(f"{r}: {len(hs)} root heaps\n" for r, hs in found.items()), out)

    _guarded(body)


# =============================================================================
# Folding
# =============================================================================


@app.command()
def fold(
    family: str = typer.Option("C_fold", "--family", "-f", help="Folded catalog family"),
    rank: int = typer.Option(3, "--rank", "-r", help="Rank l"),
    character: str | None = typer.Option(
        None, "--character", "-c", help="Cover character of a convex subheap to push through"
    ),
    window: int | None = typer.Option(1, "--window", "-k", help="Window periods k"),
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Show how a folded heap sits over its cover, and fold a cover subheap."""

    def body() -> int:
        config = _configure(verbose)
        fmt = _format("fold", format_, config)
        k = _window(window, config)
        key = resolve_key(family, rank)
        heap = build(key)
        provenance = heap.provenance
        if provenance is None:
            raise UsageError(f"{key.slug} is not a folded heap")
        result: dict[str, Any] = {
            "key": key.slug,
            "diagram": heap.diagram.name,
            "cover": provenance.cover.diagram.name,
            "mu": list(provenance.folded.mu),
            "twisted": provenance.twisted,
            "cover_word": list(provenance.cover_labels),
            "word": list(heap.word()),
        }
        status = 0
        if character is not None:
            alpha = parse_root(character)
            cover_space = RepresentationSpace(provenance.cover, provenance.orientation)
            win = provenance.cover.window(k)
            subheaps = []
            for root_heap in cover_space.find_root_heaps(alpha, win):
                finite = win.subheap(root_heap.indices(win))
                subheaps.append(
                    {
                        "elements": [list(e) for e in root_heap.elements],
                        "parity": finite.parity(provenance.orientation),
                    }
                )
            result["subheap"] = {
                "character": alpha.to_json_value(),
                "folded_character": provenance.folded.push(alpha).to_json_value(),
                "found": subheaps,
            }
            status = 0 if subheaps else 1
        if fmt == "json":
            _emit(_json(result), out)
        else:
            lines = [
                f"{result['key']} over {result['diagram']} folds {result['cover']}",
                f"mu = {result['mu']}" + (" (halved period)" if result["twisted"] else ""),
                f"cover word  {' '.join(map(str, result['cover_word']))}",
                f"folded word {' '.join(map(str, result['word']))}",
            ]
            if "subheap" in result:
                sub = result["subheap"]
                lines.append(f"character {sub['character']} -> {sub['folded_character']}")
                lines += [f"  {s['elements']} parity {s['parity']:+d}" for s in sub["found"]]
            _emit("\n".join(lines) + "\n", out)
        return status

    _guarded(body)


# =============================================================================
# Render
# =============================================================================


@app.command()
def render(
    family: str = FamilyOpt,
    rank: int = RankOpt,
    variant: str | None = VariantOpt,
    what: str = typer.Option("heap", "--what", help="heap, crystal or chevalley"),
    window: int | None = typer.Option(1, "--window", "-k", help="Window periods k"),
    orientation: str | None = OrientationOpt,
    quotient: bool = typer.Option(False, "--quotient", help="Crystal on height zero with wraps"),
    format_: str | None = FormatOpt,
    out: Path | None = OutOpt,
    verbose: bool = VerboseOpt,
) -> None:
    """Serialize a heap window, its crystal graph or its Chevalley table."""

    def body() -> None:
        config = _configure(verbose)
        command = f"render {what}"
        if command not in FORMATS:
            raise UsageError(f"--what must be heap, crystal or chevalley, not {what!r}")
        fmt = _format(command, format_, config)
        k = _window(window, config)
        heap = build(resolve_key(family, rank, variant))
        if what == "heap":
            payload: str | bytes = {
                "text": lambda: render_text(heap, k),
                "json": lambda: heap_to_json(heap),
                "dot": lambda: render_dot(heap, k),
            }[fmt]()
        elif what == "crystal":
            from heapkit.crystal import build_crystal_graph

            graph = build_crystal_graph(heap, quotient=quotient)
            payload = graph.to_json() + b"\n" if fmt == "json" else graph.to_dot()
        else:
            from heapkit.rep import chevalley_table

            space = RepresentationSpace(heap, parse_orientation(heap.diagram, orientation))
            table = chevalley_table(space)
            if fmt == "csv":
                payload = table.to_csv()
            else:
                payload = _json(
                    {
                        "diagram": table.diagram,
                        "brackets": [
                            [r.alpha.to_json_value(), r.beta.to_json_value(), r.constant]
                            for r in table.brackets
                        ],
                        "coroots": [
                            [r.alpha.to_json_value(), r.coroot.to_json_value()]
                            for r in table.coroots
                        ],
                    }
                )
        _emit(payload, out)

    _guarded(body)


def main() -> None:
    app()


if __name__ == "__main__":
    main()
