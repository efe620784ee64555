"""
Command-line interface for Index Pairing Hub.

Provides the ``index-hub`` commands for evaluating pairings, browsing
the group catalog and starting the API server.
"""

from index_pairing_hub.cli.app import app, run_cli, run_query
from index_pairing_hub.cli.commands import (
    catalog_command,
    query_command,
    server_command,
    validate_command,
    version_command,
)

__all__ = [
    "app",
    "run_cli",
    "run_query",
    "query_command",
    "catalog_command",
    "validate_command",
    "version_command",
    "server_command",
]
