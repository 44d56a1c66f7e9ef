"""
Report display functions.
Renders experiment reports, run summaries and errors on the shared console.
"""

import math
from typing import Any

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..storage.models import ExperimentReport, ReportRow, RowStatus

console = Console()

STATUS_STYLES = {
    RowStatus.PASS: "green",
    RowStatus.FAIL: "red",
    RowStatus.INFO: "dim",
}

# rows beyond this are summarized instead of printed
MAX_ROWS = 60


def format_value(value: Any) -> str:
    """Short human-readable form of a report value."""
    if isinstance(value, bool) or value is None:
        return str(value)
    if isinstance(value, float):
        if math.isnan(value) or math.isinf(value):
            return str(value)
        return f"{value:.6g}" if abs(value) >= 1e-3 or value == 0 else f"{value:.3e}"
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j"
    if isinstance(value, dict):
        if "pieces" in value or "tails" in value:
            return "<vector>"
        return ", ".join(f"{k}={format_value(v)}" for k, v in value.items())
    if isinstance(value, (list, tuple)):
        shown = ", ".join(format_value(v) for v in list(value)[:6])
        return f"[{shown}{', ...' if len(value) > 6 else ''}]"
    if hasattr(value, "tolist"):
        return format_value(value.tolist())
    return str(value)


def _row_cells(row: ReportRow) -> list[str]:
    style = STATUS_STYLES[row.status]
    residual = "" if row.residual is None else format_value(row.residual)
    tolerance = "" if row.tolerance is None else format_value(row.tolerance)
    return [
        row.label,
        f"[{style}]{row.status.value}[/{style}]",
        residual,
        tolerance,
        format_value(row.values) if row.values else "",
    ]


def display_report(report: ExperimentReport) -> None:
    """
    Display one report as a table followed by its summary panel.

    Args:
        report: ExperimentReport to render
    """
    console.print()
    table = Table(
        title=f"[bold cyan]{report.command}[/bold cyan]",
        show_header=True,
        header_style="bold cyan",
        border_style="cyan",
    )
    table.add_column("Row", style="white", overflow="fold")
    table.add_column("Status", justify="center", width=6)
    table.add_column("Residual", justify="right", style="magenta")
    table.add_column("Tolerance", justify="right", style="yellow")
    table.add_column("Values", style="white", overflow="fold")

    for row in report.rows[:MAX_ROWS]:
        table.add_row(*_row_cells(row))
    if len(report.rows) > MAX_ROWS:
        table.add_row(f"[dim]... {len(report.rows) - MAX_ROWS} more rows in the JSON report[/dim]", "", "", "", "")
    console.print(table)

    summary = report.summary
    color = "green" if summary.passed else "red"
    verdict = "PASS" if summary.passed else "FAIL"
    lines = [
        f"[bold {color}]{verdict}[/bold {color}]",
        f"max residual: {format_value(summary.max_residual)}",
        f"achieved: {format_value(summary.achieved)}",
    ]
    if summary.target is not None:
        lines.append(f"target: {format_value(summary.target)}")
    console.print(Panel("\n".join(lines), title=f"{report.command} summary", border_style=color, padding=(0, 2)))


def display_run_summary(reports: list[ExperimentReport]) -> None:
    """
    Display the pass/fail overview of several reports (the `all` command).

    Args:
        reports: Reports in run order
    """
    console.print()
    table = Table(title="Experiment Summary", show_header=True, header_style="bold bright_yellow", border_style="yellow")
    table.add_column("Command", style="cyan")
    table.add_column("Model", style="white")
    table.add_column("Rows", justify="right")
    table.add_column("Max residual", justify="right", style="magenta")
    table.add_column("Status", justify="center")

    for report in reports:
        model = report.parameters.get("model")
        model_id = model.get("model", "") if isinstance(model, dict) else ""
        status = "[green]✅ pass[/green]" if report.passed else "[red]❌ fail[/red]"
        table.add_row(report.command, model_id, str(len(report.rows)), format_value(report.summary.max_residual), status)

    console.print(table)
    failed = sum(not r.passed for r in reports)
    if failed:
        console.print(f"\n[red]{failed} of {len(reports)} experiments failed.[/red]\n")
    else:
        console.print(f"\n[green]All {len(reports)} experiments passed.[/green]\n")


def display_saved(path: str, kind: str) -> None:
    console.print(f"[dim]{kind} report written to {path}[/dim]")


def display_error(message: str) -> None:
    """Print an error in red."""
    console.print(f"\n[red]Error: {message}[/red]\n")
