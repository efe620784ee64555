"""
CLI application for Index Pairing Hub.

This module defines the main Typer application and its command structure.
Exit codes: 0 success, 1 computation error, 2 malformed input.
"""

import logging
import sys
from typing import List, Optional

import click
import typer
from rich.console import Console

from index_pairing_hub.cli.commands import (
    EXIT_USAGE_ERROR,
    catalog_command,
    query_command,
    server_command,
    validate_command,
    version_command,
)
from index_pairing_hub.utils.logging import configure_logging

# Create console for rich output
console = Console(stderr=True)

app = typer.Typer(
    name="index-hub",
    help="Index Pairing Hub - exact orbital-integral pairings of Dirac indices",
    add_completion=False,
    rich_markup_mode="rich",
)

app.command(name="query", help="Evaluate an index pairing")(query_command)
app.command(name="catalog", help="List or describe catalog groups")(catalog_command)
app.command(name="validate", help="Validate a group specification file")(validate_command)
app.command(name="version", help="Show version information")(version_command)
app.command(name="server", help="Start the API server")(server_command)

logger = logging.getLogger("index_pairing_hub.cli")


def run_cli(args: Optional[List[str]] = None) -> int:
    """
    Run the CLI application with proper error handling and logging.

    Args:
        args: Command line arguments (uses sys.argv if None)

    Returns:
        int: Exit code
    """
    configure_logging(console_output=True, rich_console=True)

    try:
        result = app(args, standalone_mode=False)
        return result if isinstance(result, int) else 0
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE_ERROR
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except (KeyboardInterrupt, click.Abort):
        logger.info("Operation cancelled by user")
        console.print("\n[yellow]Operation cancelled by user[/yellow]")
        return 130  # Standard exit code for SIGINT
    except Exception as e:
        logger.exception(f"Error running CLI: {str(e)}")
        console.print(f"\n[bold red]Error:[/bold red] {str(e)}")
        return 1


def run_query(argv: Optional[List[str]] = None) -> int:
    """``index-hub query ...`` with the given flags."""
    return run_cli(["query", *(argv or [])])


def start() -> None:
    """Console-script entrypoint."""
    sys.exit(run_cli())


if __name__ == "__main__":
    start()
