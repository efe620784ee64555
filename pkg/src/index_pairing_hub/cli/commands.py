"""
Command implementations for the Index Pairing Hub CLI.

This module contains the actual implementations of the CLI commands,
separated from the application definition for better organization.
"""

import json
from pathlib import Path
from typing import NoReturn, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table

from index_pairing_hub import __version__
from index_pairing_hub.config.settings import settings
from index_pairing_hub.domain.conventions import (
    BernoulliConvention,
    NormReading,
    QueryMode,
    SignConvention,
    SubscriptVariant,
)
from index_pairing_hub.domain.errors import IndexHubError, InvalidInput
from index_pairing_hub.domain.rootsys import build_pair, validate_pair
from index_pairing_hub.domain.schema import ElementSpec, GammaData, IndexReport, QuerySpec
from index_pairing_hub.domain.weights import BilinearForm, WeightVec, format_fraction, parse_rational_list
from index_pairing_hub.services.catalog import default_catalog, parse_group_spec
from index_pairing_hub.services.processor import QueryService
from index_pairing_hub.utils.helpers import load_json_file, parse_json_argument, save_json_file

# Create console for rich output
console = Console()
err_console = Console(stderr=True)

EXIT_COMPUTATION_ERROR = 1
EXIT_USAGE_ERROR = 2


def _fail(code: str, message: str, exit_code: int) -> NoReturn:
    err_console.print(f"[bold red]Error[/bold red] {escape(f'[{code}]')}: {escape(message)}", highlight=False)
    raise typer.Exit(code=exit_code)


def _read_json(path: Path, what: str) -> object:
    try:
        return load_json_file(path)
    except (OSError, json.JSONDecodeError) as e:
        _fail("INVALID_INPUT", f"Cannot read {what} {path}: {e}", EXIT_USAGE_ERROR)


def build_query(
    group: Optional[str],
    group_file: Optional[Path],
    lambda_: str,
    element: Optional[str],
    gamma_file: Optional[Path],
    mode: QueryMode,
    levi: Optional[str],
    diagnostics: bool,
    sign_flag: Optional[SignConvention],
    bernoulli: Optional[BernoulliConvention],
    subscript_variant: Optional[SubscriptVariant],
    norm_reading: Optional[NormReading],
) -> QuerySpec:
    """
    Assemble a QuerySpec from command-line flags.

    Raises:
        InvalidInput: any malformed flag value.
    """
    if (group is None) == (group_file is None):
        raise InvalidInput("Give exactly one of --group or --group-file")
    group_spec = None
    if group_file is not None:
        group_spec = parse_group_spec(_read_json(group_file, "group file"), str(group_file))
    lam = [format_fraction(x) for x in parse_rational_list(lambda_)]
    try:
        element_spec = (
            ElementSpec.model_validate(parse_json_argument(element)) if element else None
        )
        gamma = GammaData.model_validate(_read_json(gamma_file, "gamma file")) if gamma_file else None
        return QuerySpec(
            group=group,
            group_spec=group_spec,
            lambda_=lam,
            element=element_spec,
            gamma=gamma,
            mode=mode,
            levi=levi,
            diagnostics=diagnostics,
            sign_convention=sign_flag,
            bernoulli=bernoulli,
            subscript_variant=subscript_variant,
            norm_reading=norm_reading,
        )
    except (ValueError, ValidationError) as e:
        raise InvalidInput(str(e)) from e


def _pair_text(value: tuple) -> str:
    re, im = value
    if im == 0:
        return f"{re:.12g}"
    return f"{re:.12g} {'+' if im >= 0 else '-'} {abs(im):.12g}i"


def render_report(report: IndexReport, out: Optional[Console] = None) -> None:
    """Rich tables for the text output format."""
    out = out or console
    out.print(Panel(
        f"[bold]Group[/bold]: [cyan]{report.group}[/cyan]\n"
        f"[bold]λ[/bold]: [cyan]({', '.join(report.lambda_)})[/cyan]\n"
        f"[bold]Mode[/bold]: [cyan]{report.mode.value}[/cyan]  "
        f"[bold]Sign[/bold]: {report.sign_convention.value}  "
        f"[bold]Bernoulli[/bold]: {report.bernoulli.value}",
        title="Index Pairing",
        border_style="blue",
    ))

    table = Table(title="Contributions", border_style="blue")
    table.add_column("Term", style="cyan")
    table.add_column("Coefficient", justify="right")
    table.add_column("Value", justify="right")
    table.add_column("Weighted", justify="right")
    table.add_column("Note")
    for term in report.terms:
        table.add_row(
            escape(term.label),
            f"{term.coefficient:.12g}",
            _pair_text(term.value),
            _pair_text(term.weighted),
            escape(term.note or ""),
        )
    table.add_row("[bold]total[/bold]", "", "", f"[bold]{_pair_text(report.total)}[/bold]", "")
    out.print(table)

    if report.assembled_index is not None:
        flag = "[green]yes[/green]" if report.near_integer else "[red]no[/red]"
        out.print(
            f"Assembled index: [bold]{report.assembled_index:.12g}[/bold]  "
            f"near integer: {flag} (deviation {report.deviation:.3g})"
        )

    if report.decomposition:
        decomposition = Table(title="K∩M-types", border_style="blue")
        decomposition.add_column("λ_U", style="cyan")
        decomposition.add_column("m_U", justify="right")
        for entry in report.decomposition:
            decomposition.add_row(f"({', '.join(entry.weight)})", str(entry.multiplicity))
        out.print(decomposition)

    if report.diagnostics:
        diagnostics = Table(title="Coset terms", border_style="blue")
        diagnostics.add_column("w", style="cyan")
        diagnostics.add_column("ℓ(w)", justify="right")
        diagnostics.add_column("det", justify="right")
        diagnostics.add_column("Value", justify="right")
        for d in report.diagnostics:
            rows = "; ".join(" ".join(row) for row in d.coset_rep)
            diagnostics.add_row(f"[{rows}]", str(d.length), str(d.det), _pair_text(d.value))
        out.print(diagnostics)

    for warning in report.warnings:
        out.print(f"[yellow]Warning:[/yellow] {escape(warning)}")


def report_json(report: IndexReport) -> str:
    return report.model_dump_json(by_alias=True, indent=2)


def query_command(
    group: Optional[str] = typer.Option(None, "--group", "-g", help="Catalog group name"),
    group_file: Optional[Path] = typer.Option(
        None, "--group-file", help="Group specification JSON (catalog schema)"
    ),
    lambda_: str = typer.Option(..., "--lambda", "-l", help='Highest weight of W, e.g. "1/2,1/2,-1"'),
    element: Optional[str] = typer.Option(
        None, "--element", "-e", help='Element JSON, e.g. \'{"type":"elliptic","X":["1/3","0","-1/3"]}\''
    ),
    gamma_file: Optional[Path] = typer.Option(None, "--gamma-file", help="Γ-data JSON"),
    mode: QueryMode = typer.Option(QueryMode.ORBITAL, "--mode", "-m", help="What to evaluate"),
    levi: Optional[str] = typer.Option(None, "--levi", help="Levi name for --mode higher"),
    output_format: str = typer.Option("text", "--format", "-f", help="text or json"),
    output_file: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Also save the JSON report to this file"
    ),
    diagnostics: bool = typer.Option(False, "--diagnostics", help="Show per-coset terms"),
    sign_flag: Optional[SignConvention] = typer.Option(
        None, "--sign-flag", help="Exponent sign in the closed form"
    ),
    bernoulli: Optional[BernoulliConvention] = typer.Option(
        None, "--bernoulli", help="Bernoulli number convention"
    ),
    subscript_variant: Optional[SubscriptVariant] = typer.Option(
        None, "--subscript-variant", help="σ subscript in the remainder term"
    ),
    norm_reading: Optional[NormReading] = typer.Option(
        None, "--norm-reading", help="Meaning of ‖λ‖ in the N_2λ term"
    ),
) -> None:
    """
    Evaluate an orbital integral, a higher pairing, the non-semisimple
    terms or the assembled index.

    Exit code 1 signals a computation error, 2 malformed input.

    Examples:
        index-hub query --group su11 --lambda 1/2 --element '{"type":"central"}'
        index-hub query --group su21 --lambda 1/2,1/2,-1 --mode higher --levi T \\
            --element '{"type":"elliptic","X":["1/7","2/7","-3/7"]}'
    """
    if output_format not in ("text", "json"):
        _fail("INVALID_INPUT", f"Unknown format '{output_format}' (text or json)", EXIT_USAGE_ERROR)
    try:
        query = build_query(
            group, group_file, lambda_, element, gamma_file, mode, levi,
            diagnostics, sign_flag, bernoulli, subscript_variant, norm_reading,
        )
    except IndexHubError as e:
        _fail(e.code, e.message, EXIT_USAGE_ERROR)

    result = QueryService().run(query)
    if result.is_error():
        exit_code = EXIT_USAGE_ERROR if result.code == InvalidInput.code else EXIT_COMPUTATION_ERROR
        _fail(result.code, result.error, exit_code)

    report = result.unwrap()
    if output_format == "json":
        typer.echo(report_json(report))
    else:
        render_report(report)

    if output_file:
        try:
            save_json_file(report.model_dump(mode="json", by_alias=True), output_file)
            console.print(f"Report saved to [green]{output_file}[/green]")
        except (OSError, TypeError) as e:
            _fail("IO_ERROR", f"Failed to save output file: {e}", EXIT_COMPUTATION_ERROR)


def catalog_command(
    name: Optional[str] = typer.Argument(None, help="Group to describe; omit to list all"),
) -> None:
    """List catalog groups or describe one of them."""
    catalog = default_catalog()
    if name is None:
        table = Table(title="Group catalog", border_style="blue")
        table.add_column("Name", style="cyan")
        table.add_column("Rank", justify="right")
        table.add_column("dim G/K", justify="right")
        table.add_column("Real rank one")
        for group in catalog.names():
            entry = catalog.lookup(group)
            table.add_row(
                group, str(entry.pair.rank), str(entry.pair.dim_GK),
                "yes" if entry.rank_one else "no",
            )
        console.print(table)
        return

    try:
        entry = catalog.lookup(name)
    except IndexHubError as e:
        _fail(e.code, e.message, EXIT_COMPUTATION_ERROR)
    pair = entry.pair
    table = Table(title=f"{entry.name}", show_header=False, border_style="blue")
    table.add_column("Property", style="cyan")
    table.add_column("Value")
    table.add_row("Rank", str(pair.rank))
    table.add_row("dim G/K", str(pair.dim_GK))
    table.add_row("Positive roots", " ".join(str(a) for a in pair.positive_vectors))
    table.add_row("Compact positive", " ".join(str(a) for a in pair.compact_positive) or "-")
    table.add_row("ρ", str(pair.rho))
    table.add_row("ρ_c", str(pair.rho_c))
    table.add_row("ρ_n", str(pair.rho_n))
    table.add_row("Levis", ", ".join(l.name for l in entry.levis) or "-")
    for note in entry.notes:
        table.add_row("Note", escape(note))
    console.print(table)


def validate_command(
    group_file: Path = typer.Argument(..., help="Group specification JSON"),
) -> None:
    """Check a group file against the root datum axioms."""
    try:
        spec = parse_group_spec(_read_json(group_file, "group file"), str(group_file))
        form = BilinearForm.from_rows(spec.gram)
        pair = build_pair(
            spec.name,
            [WeightVec.of(r) for r in spec.simple_roots],
            form,
            spec.compact_roots,
            equal_rank=spec.equal_rank,
            bound=settings.computation.root_closure_bound,
        )
    except IndexHubError as e:
        _fail(e.code, e.message, EXIT_USAGE_ERROR if isinstance(e, InvalidInput) else EXIT_COMPUTATION_ERROR)

    violations = validate_pair(pair)
    if not violations:
        console.print(f"[green]{spec.name}[/green]: {len(pair.positive_roots)} positive roots, "
                      f"dim G/K = {pair.dim_GK}, no violations")
        return
    table = Table(title=f"{spec.name}: violations", border_style="red")
    table.add_column("Code", style="red")
    table.add_column("Message")
    table.add_column("Roots")
    for v in violations:
        table.add_row(v.code, v.message, " ".join(f"({', '.join(r)})" for r in v.roots))
    console.print(table)
    raise typer.Exit(code=EXIT_COMPUTATION_ERROR)


def version_command() -> None:
    """
    Display version information for Index Pairing Hub.
    """
    comp = settings.computation
    table = Table(title="Index Pairing Hub", show_header=False, border_style="blue")
    table.add_column("Property", style="cyan")
    table.add_column("Value")

    table.add_row("Version", __version__)
    table.add_row("Environment", settings.environment)
    table.add_row("Sign convention", comp.sign_convention.value)
    table.add_row("Bernoulli", comp.bernoulli.value)
    table.add_row("Catalog", settings.catalog.catalog_dir)

    console.print(table)


def server_command(
    host: str = typer.Option(settings.host, "--host", help="Host address to bind server to"),
    port: int = typer.Option(settings.port, "--port", "-p", help="Port number to listen on"),
    reload: bool = typer.Option(False, "--reload", help="Enable auto-reload for development"),
    workers: int = typer.Option(1, "--workers", "-w", help="Number of worker processes"),
    log_level: str = typer.Option(
        settings.log_level, "--log-level", help="Logging level (DEBUG, INFO, WARNING, ERROR)"
    ),
) -> None:
    """
    Start the Index Pairing Hub API server.

    Examples:
        index-hub server --reload
        index-hub server --host 0.0.0.0 --port 8080 --workers 4
    """
    server_info = [
        "[bold]API Server Configuration[/bold]",
        f"Host: [cyan]{host}[/cyan]",
        f"Port: [cyan]{port}[/cyan]",
        f"Workers: [cyan]{workers}[/cyan]",
        f"Auto-reload: [cyan]{'Enabled' if reload else 'Disabled'}[/cyan]",
        f"Log level: [cyan]{log_level}[/cyan]",
        f"Environment: [cyan]{settings.environment}[/cyan]",
    ]
    console.print(Panel(
        "\n".join(server_info),
        title="Index Pairing Hub API",
        border_style="green",
        expand=False,
    ))

    try:
        # Import here to keep the CLI free of the web stack
        from index_pairing_hub.api.app import start as start_api

        start_api(host=host, port=port, reload=reload, workers=workers, log_level=log_level)
    except ImportError as e:
        console.print(f"[bold red]Error:[/bold red] Missing dependencies: {str(e)}")
        raise typer.Exit(code=1)
