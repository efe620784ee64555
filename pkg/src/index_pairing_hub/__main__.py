"""
Main entry point for Index Pairing Hub.

Usage:
  # launch HTTP API:
  python -m index_pairing_hub server [--host HOST] [--port PORT] [--reload]

  # or run CLI:
  python -m index_pairing_hub query --group su11 --lambda 1/2 --element '{"type":"central"}'
"""

import logging
import sys
from typing import List, Optional


def main(args: Optional[List[str]] = None) -> int:
    actual_args = args if args is not None else sys.argv[1:]
    logger = logging.getLogger("index_pairing_hub")

    try:
        # No args → HTTP API mode; "server" goes through the CLI command
        if not actual_args:
            logger.info("Starting HTTP API mode")
            from index_pairing_hub.api.app import start as start_server

            start_server()
            return 0

        from index_pairing_hub.cli.app import run_cli
        return run_cli(actual_args)

    except KeyboardInterrupt:
        logger.info("Operation cancelled by user")
        print("Operation cancelled by user")
        return 130

    except Exception as e:
        logger.exception("Unhandled exception in main(): %s", e)
        print(f"Error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
