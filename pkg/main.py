#!/usr/bin/env python3
"""
racopt - Main Entry Point
Exact values, improvement and optimality certificates for classical random
access codes with a d-letter message.

Strategy files are JSON objects {"n": int, "d": int, "rows": [[...], ...]}
with 0-based letters; randomized strategies are {"components": [{"weight":
"p/q", "matrix": {...}}, ...]}. Human-readable output uses the 1-based
alphabet {1, ..., d} and 1-based rows and columns.
"""

import json
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import click
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table
from dotenv import load_dotenv

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

# Load environment variables
load_dotenv()

from src import __version__  # noqa: E402
from src.utils.errors import EnumerationCapError, InvalidInputError  # noqa: E402

console = Console(soft_wrap=True)
err_console = Console(stderr=True, soft_wrap=True)

EXIT_INPUT = 2
EXIT_CAP = 3


@dataclass
class Settings:
    """Global options shared by every command."""

    output_format: str
    digits: int
    force: bool
    cap: int
    oracle_cap: int


@contextmanager
def reporting_errors():
    """Map library errors to the stable exit codes."""
    try:
        yield
    except EnumerationCapError as e:
        err_console.print(f"[red]Refused: {escape(str(e))}[/red]")
        sys.exit(EXIT_CAP)
    except InvalidInputError as e:
        err_console.print(f"[red]Invalid input: {escape(str(e))}[/red]")
        sys.exit(EXIT_INPUT)


def _letters(word) -> str:
    return " ".join(str(letter + 1) for letter in word)


def _decimal(value, settings: Settings) -> str:
    from src.utils.rationals import format_rational, to_decimal_string

    return f"{format_rational(value)} ({to_decimal_string(value, settings.digits)})"


def _emit_json(data) -> None:
    click.echo(json.dumps(data, indent=2))


def _emit_csv_rows(header, row) -> None:
    click.echo(",".join(header))
    click.echo(",".join(str(cell) for cell in row))


def _reject_csv(settings: Settings, command: str) -> None:
    if settings.output_format == "csv":
        raise click.UsageError(f"{command} has no CSV form; use --format json or text")


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json", "csv"]),
    default="text",
    help="Output format",
)
@click.option("--digits", type=click.IntRange(min=1), default=None, help="Significant digits of decimal renderings")
@click.option("--force", is_flag=True, help="Lift the enumeration caps")
@click.option("--cap", type=click.IntRange(min=1), default=None, help="Word enumeration cap (env RACOPT_CAP)")
@click.pass_context
def cli(ctx, output_format, digits, force, cap):
    """racopt - optimal classical random access codes, in exact arithmetic."""
    from src.utils.config import Config
    from src.utils.logger import setup_logging

    config = Config()
    is_valid, error_msg = config.validate()
    if not is_valid:
        err_console.print(f"[red]Configuration error: {error_msg}[/red]")
        sys.exit(EXIT_INPUT)

    setup_logging(config.log_level, config.log_file)
    ctx.obj = Settings(
        output_format=output_format,
        digits=digits or config.decimal_digits,
        force=force,
        cap=cap or config.word_cap,
        oracle_cap=config.oracle_cap,
    )


@cli.command()
@click.argument("strategy_file", type=click.Path(path_type=Path))
@click.pass_obj
def value(settings: Settings, strategy_file):
    """Exact value of the strategy in STRATEGY_FILE."""
    from src.game.strategy import DecodingMatrix
    from src.storage.files import load_strategy
    from src.storage.reports import value_report_to_dict
    from src.value.evaluator import randomized_value
    from src.value.report import ValueMethod, ValueReport, evaluate

    with reporting_errors():
        strategy = load_strategy(strategy_file)
        if isinstance(strategy, DecodingMatrix):
            report = evaluate(strategy, settings.cap, settings.force)
        else:
            report = ValueReport(
                randomized_value(strategy, settings.cap, settings.force),
                ValueMethod.WORD_ENUMERATION,
                strategy.params,
            )

    data = value_report_to_dict(report, settings.digits)
    if settings.output_format == "json":
        _emit_json(data)
    elif settings.output_format == "csv":
        _emit_csv_rows(list(data), list(data.values()))
    else:
        console.print(f"Value {report.params}: {_decimal(report.value, settings)}")


@cli.command("optimal-value")
@click.argument("n", type=click.IntRange(min=1), required=False)
@click.argument("d", type=click.IntRange(min=1), required=False)
@click.option(
    "--table",
    nargs=2,
    type=click.IntRange(1, 1000),
    default=None,
    metavar="N_MAX D_MAX",
    help="Grid of optimal values for all 1 ≤ n ≤ N_MAX, 1 ≤ d ≤ D_MAX",
)
@click.pass_obj
def optimal_value(settings: Settings, n, d, table):
    """Optimal value of the game with word length N and alphabet size D."""
    from src.game.params import GameParams
    from src.storage.reports import table_frame, table_to_csv, table_to_dict, value_report_to_dict
    from src.value.multiplicity import optimal_value_table
    from src.value.report import optimal_value_report

    if table:
        frame = table_frame(optimal_value_table(*table))
        if settings.output_format == "json":
            _emit_json(table_to_dict(frame, settings.digits))
        else:
            click.echo(table_to_csv(frame), nl=False)
        return

    if n is None or d is None:
        raise click.UsageError("give N and D, or --table N_MAX D_MAX")

    with reporting_errors():
        report = optimal_value_report(GameParams(n=n, d=d))
    data = value_report_to_dict(report, settings.digits)
    if settings.output_format == "json":
        _emit_json(data)
    elif settings.output_format == "csv":
        _emit_csv_rows(list(data), list(data.values()))
    else:
        console.print(f"Optimal value {report.params}: {_decimal(report.value, settings)}")


@cli.command()
@click.argument("strategy_file", type=click.Path(path_type=Path))
@click.pass_obj
def check(settings: Settings, strategy_file):
    """Certify whether the strategy in STRATEGY_FILE is optimal."""
    from src.optimality.certificate import certify
    from src.storage.files import load_strategy
    from src.storage.reports import certification_to_dict

    with reporting_errors():
        strategy = load_strategy(strategy_file)
        cert = certify(strategy, settings.cap, settings.force)

    data = certification_to_dict(cert, settings.digits)
    if settings.output_format == "json":
        _emit_json(data)
        return
    if settings.output_format == "csv":
        _emit_csv_rows(list(data), ["" if v is None else v for v in data.values()])
        return

    def flag(value: Optional[bool]) -> str:
        return "n/a" if value is None else str(value).lower()

    table = Table(show_header=False, title=f"Certificate {cert.params}")
    table.add_column("property", style="cyan")
    table.add_column("value")
    table.add_row("regime", cert.regime.value)
    table.add_row("permutation columns", flag(cert.permutation_columns))
    table.add_row("one free column", flag(cert.one_free_column))
    table.add_row("optimal value", _decimal(cert.optimal_value, settings))
    table.add_row("value", "not computed" if cert.value is None else _decimal(cert.value, settings))
    console.print(table)
    color = "green" if cert.optimal else "yellow"
    console.print(f"[{color}]optimal: {flag(cert.optimal)}[/{color}]")
    if cert.gap is not None:
        console.print(f"gap: {_decimal(cert.gap, settings)}")


@cli.command()
@click.argument("strategy_file", type=click.Path(path_type=Path))
@click.option("--output", "-o", type=click.Path(path_type=Path), help="Write the final matrix to this file")
@click.pass_obj
def improve(settings: Settings, strategy_file, output):
    """Improve the matrix in STRATEGY_FILE to one with permutation columns."""
    _reject_csv(settings, "improve")
    from src.improve.steps import normalize
    from src.storage.files import load_matrix, save_strategy
    from src.storage.reports import trace_to_dict

    with reporting_errors():
        f = load_matrix(strategy_file)
        cap = f.params.word_count if settings.force else settings.cap
        trace = normalize(f, with_values=True, cap=cap)

    if output:
        save_strategy(trace.final, output)

    if settings.output_format == "json":
        _emit_json(trace_to_dict(trace))
        return

    console.print(
        Panel.fit(
            "\n".join(_letters(row) for row in trace.final.rows),
            title=f"Final matrix {trace.final.params}",
        )
    )
    console.print(f"[cyan]Steps:[/cyan] {len(trace.steps)}")
    for i, step in enumerate(trace.steps, 1):
        line = (
            f"  {i}. column {step.column + 1}, row {step.row + 1}: "
            f"{step.from_letter + 1} -> {step.to_letter + 1}"
        )
        if trace.values is not None:
            line += f"  value {_decimal(trace.values[i], settings)}"
        console.print(line)
    if trace.values is not None:
        console.print(f"[cyan]Value:[/cyan] {_decimal(trace.values[0], settings)} -> {_decimal(trace.values[-1], settings)}")
    if output:
        console.print(f"[cyan]Final matrix saved to:[/cyan] {output}")


@cli.command()
@click.argument("n", type=click.IntRange(min=1))
@click.argument("d", type=click.IntRange(min=1))
@click.option("--oracle", is_flag=True, help="Confirm by scanning every decoding matrix")
@click.option("--oracle-cap", type=click.IntRange(min=1), default=None, help="Matrix-space cap (env RACOPT_ORACLE_CAP)")
@click.pass_obj
def count(settings: Settings, n, d, oracle, oracle_cap):
    """Number of optimal decoding matrices for word length N and alphabet size D."""
    from src.game.params import GameParams
    from src.optimality.oracle import oracle_enumerate
    from src.optimality.properties import count_optimal
    from src.storage.reports import count_to_dict, oracle_to_dict

    with reporting_errors():
        params = GameParams(n=n, d=d)
        result = count_optimal(params)
        scan = None
        if oracle:
            scan = oracle_enumerate(
                params, cap=oracle_cap or settings.oracle_cap, force=settings.force
            )

    data = count_to_dict(result, scan)
    if settings.output_format == "json":
        _emit_json(data if scan is None else {**data, "oracle": oracle_to_dict(scan)})
    elif settings.output_format == "csv":
        _emit_csv_rows(list(data), list(data.values()))
    else:
        console.print(f"Optimal matrices {params}: {result.count} ({result.basis.value})")
        if scan is not None:
            console.print(f"Oracle: {scan.optimizer_count} (max value {_decimal(scan.max_value, settings)})")
            color = "green" if data["verdict"] == "AGREE" else "red"
            console.print(f"[{color}]{data['verdict']}[/{color}]")


@cli.command()
@click.argument("strategy_file", type=click.Path(path_type=Path))
@click.option("--column", "-j", type=int, default=None, help="0-based column of the changed entry")
@click.option("--row", "-y", type=int, default=None, help="0-based row losing its letter")
@click.option("--other-row", "-z", type=int, default=None, help="0-based row whose letter is copied")
@click.pass_obj
def witness(settings: Settings, strategy_file, column, row, other_row):
    """
    Word certifying a strict loss of value.

    With --column/--row/--other-row: a word that the matrix approximates
    strictly worse after copying the other row's letter into (row, column).
    Without them: for a binary matrix of even length with two or more constant
    columns, a word no row matches in half of its positions.
    """
    _reject_csv(settings, "witness")
    from src.game.words import sim
    from src.improve.witnesses import binary_deficit_witness, merge_entry, strictness_witness
    from src.storage.files import load_matrix

    with reporting_errors():
        f = load_matrix(strategy_file)
        cell = (column, row, other_row)
        if any(v is not None for v in cell):
            if any(v is None for v in cell):
                raise InvalidInputError("--column, --row and --other-row go together")
            word = strictness_witness(f, column, row, other_row)
            merged = merge_entry(f, column, row, other_row)
        else:
            word = binary_deficit_witness(f)
            merged = None

    data = {
        "word": list(word),
        "best_sim": max(sim(r, word) for r in f.rows),
        "merged_best_sim": None if merged is None else max(sim(r, word) for r in merged.rows),
    }
    if settings.output_format == "json":
        _emit_json(data)
        return
    console.print(f"Witness word: {_letters(word)}")
    console.print(f"Best similarity: {data['best_sim']} of {f.n}")
    if merged is not None:
        console.print(f"Best similarity after the change: {data['merged_best_sim']} of {f.n}")


if __name__ == "__main__":
    cli()
