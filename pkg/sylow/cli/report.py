"""
Rendering of command reports as JSON, CSV or rich text tables.

JSON and CSV carry no timestamps, so output is byte-identical for a fixed
configuration and seed.
"""

import csv
import json
from typing import Any, TextIO

from rich.console import Console
from rich.table import Table

from sylow.cli.commands import CommandReport
from sylow.core.config import JobConfig


def to_json(report: CommandReport, cfg: JobConfig) -> str:
    document = {
        "command": report.command,
        "config": cfg.to_dict(),
        "ok": report.ok,
        "summary": report.summary,
        **report.payload,
    }
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)


def _cell(value: Any) -> str:
    """Compact text for one table cell."""
    if value is None:
        return "-"
    if isinstance(value, dict) and "entries" in value:
        terms = [f"{v}·e{i},{j}" for i, j, v in value["entries"]]
        return " + ".join(terms) if terms else "0"
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    if isinstance(value, dict):
        return json.dumps(value, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return str(value)


def write_csv(report: CommandReport, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    if not report.rows:
        writer.writerow(["key", "value"])
        for key, value in report.summary.items():
            writer.writerow([key, _cell(value)])
        return
    columns = report.columns or sorted(report.rows[0])
    writer.writerow(columns)
    for row in report.rows:
        writer.writerow([_cell(row.get(col)) for col in columns])


def print_text(report: CommandReport, console: Console) -> None:
    console.print()
    console.print("=" * 60)
    console.print(f"[bold]{report.title}[/bold]", highlight=False)
    console.print("=" * 60)
    for key, value in report.summary.items():
        console.print(f"   {key}: {_cell(value)}", highlight=False)

    if report.rows:
        table = Table(show_header=True, header_style="bold")
        columns = report.columns or sorted(report.rows[0])
        for col in columns:
            table.add_column(col)
        for row in report.rows:
            table.add_row(*(_cell(row.get(col)) for col in columns))
        console.print(table)

    console.print()
    console.print("✅ Done" if report.ok else "❌ Verification failed")
    console.print()


def emit(report: CommandReport, cfg: JobConfig, stream: TextIO) -> None:
    """Write the report to `stream` in the configured format."""
    if cfg.output == "json":
        stream.write(to_json(report, cfg) + "\n")
    elif cfg.output == "csv":
        write_csv(report, stream)
    else:
        print_text(report, Console(file=stream, width=160))
