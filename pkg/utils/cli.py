"""
Shared CLI helpers for the command modules: output formatting, report tables
and error handling with the hqc exit codes.
"""
import json
import sys
import logging
from functools import wraps
from typing import Any, Callable, Dict, List, Optional

import click
from rich.console import Console
from rich.table import Table

from .config import ConfigManager
from .exceptions import *

logger = logging.getLogger(__name__)
console = Console()

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

# Errors caused by what the user typed rather than by the mathematics.
USAGE_ERRORS = (ParseError, VerificationError, ConfigurationError)

STATUS_STYLES = {
    'pass': 'green',
    'fail': 'bold red',
    'paper-discrepancy': 'yellow',
}


class OutputFormatter:
    """Centralized output formatting for all command responses."""

    @staticmethod
    def output_data(data: Any, output_format: str, text_formatter: Optional[Callable[[Any], None]] = None) -> None:
        """
        Universal output formatter for command responses.

        Args:
            data: JSON-serializable payload
            output_format: 'text' or 'json'
            text_formatter: Function printing the text form; JSON is used without one
        """
        if output_format == 'json' or text_formatter is None:
            click.echo(json.dumps(data, indent=2))
        else:
            text_formatter(data)

    @staticmethod
    def create_standard_table(title: str, columns: List[Dict[str, str]]) -> Table:
        """Create a standardized Rich table with common styling."""
        table = Table(title=title)
        for col in columns:
            table.add_column(col['name'], style=col.get('style', 'white'), width=col.get('width'),
                             overflow=col.get('overflow', 'fold'))
        return table

    @staticmethod
    def display_cached_message():
        """Display standard cached result message."""
        click.echo("📋 Using cached report", err=True)

    @staticmethod
    def display_error(error: Exception, context: str = ""):
        """Display standardized error message."""
        error_msg = f"❌ {context}{': ' if context else ''}{str(error)}"
        click.echo(error_msg, err=True)


def determine_output_format(output: Optional[str], config_manager: ConfigManager) -> str:
    """User flag first, then the configured default."""
    if output:
        return output
    return config_manager.get('default_output', 'text')


def format_witness(witness: Any, max_chars: int = 120) -> str:
    if witness is None:
        return ''
    text = witness if isinstance(witness, str) else json.dumps(witness, default=str)
    if len(text) > max_chars:
        return text[:max_chars - 3] + '...'
    return text


def print_report_table(report: Dict[str, Any]) -> None:
    """Rich table of a report dict followed by a one-line summary."""
    table = OutputFormatter.create_standard_table(
        f"hqc verify --suite {report['suite']} (max degree {report['max_degree']})", [
            {'name': 'Check', 'style': 'cyan'},
            {'name': 'Reference', 'style': 'white'},
            {'name': 'Status', 'style': 'white'},
            {'name': 'Witness', 'style': 'dim'},
        ])
    counts = {status: 0 for status in STATUS_STYLES}
    for check in report['checks']:
        status = check['status']
        counts[status] = counts.get(status, 0) + 1
        table.add_row(check['id'], check['paper_eq'],
                      f"[{STATUS_STYLES.get(status, 'white')}]{status}[/]",
                      format_witness(check.get('witness')))
    console.print(table)
    summary = ", ".join(f"{count} {status}" for status, count in counts.items())
    if report.get('wall_ms') is not None:
        summary += f" in {report['wall_ms']} ms"
    console.print(summary, style="bold")


# Common Click decorators for reuse
def common_output_options(f):
    """Add the standard output format option to a command."""
    return click.option('--output', type=click.Choice(['text', 'json']),
                        help='Output format (default from config)')(f)


def error_handler(f):
    """Print HQC errors as ❌ lines and exit with 2 for usage errors, 1 otherwise."""
    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except USAGE_ERRORS as e:
            OutputFormatter.display_error(e)
            sys.exit(EXIT_USAGE)
        except HQCError as e:
            OutputFormatter.display_error(e)
            sys.exit(EXIT_FAILURE)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as e:
            logger.debug("Unhandled error", exc_info=True)
            OutputFormatter.display_error(e, "Unexpected error")
            sys.exit(EXIT_FAILURE)
    return wrapper
