"""
Logging configuration for Index Pairing Hub.

Console output goes through rich when requested (the CLI), plain stream
handlers otherwise (the API server). File output is opt-in.
"""

import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import List, Optional, Union

from rich.console import Console
from rich.logging import RichHandler

APP_LOGGER = "index_pairing_hub"


def configure_logging(
    log_level: Optional[str] = None,
    log_file: Optional[Union[str, Path]] = None,
    log_format: Optional[str] = None,
    console_output: bool = True,
    file_output: Optional[bool] = None,
    rich_console: bool = False,
) -> None:
    """
    Configure logging for the application with flexible options.

    Args:
        log_level: Level name; defaults to ``settings.log_level``
        log_file: Explicit log file; implies file output
        log_format: Format string for plain handlers
        console_output: Attach a stderr handler
        file_output: Write a dated file under ``logs/``; defaults to
            ``settings.log_to_file``
        rich_console: Use a RichHandler for the console
    """
    # import settings here, not at module-level
    from index_pairing_hub.config.settings import settings

    level_name = log_level or settings.log_level
    level = getattr(logging, level_name.upper(), logging.INFO)
    if file_output is None:
        file_output = settings.log_to_file or log_file is not None

    if log_file is None and file_output:
        logs_dir = Path("logs")
        logs_dir.mkdir(exist_ok=True)
        app_name = settings.app_name.lower().replace(" ", "_")
        date_str = datetime.now().strftime("%Y-%m-%d")
        log_file = logs_dir / f"{app_name}_{date_str}.log"

    if log_format is None:
        log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    handlers: List[logging.Handler] = []

    if console_output:
        if rich_console:
            console_handler: logging.Handler = RichHandler(
                console=Console(stderr=True), show_path=False, rich_tracebacks=True
            )
            console_handler.setFormatter(logging.Formatter("%(message)s"))
        else:
            console_handler = logging.StreamHandler(sys.stderr)
            console_handler.setFormatter(logging.Formatter(log_format))
        console_handler.setLevel(level)
        handlers.append(console_handler)

    if file_output and log_file:
        log_path = Path(log_file)
        log_path.parent.mkdir(parents=True, exist_ok=True)

        file_handler = logging.FileHandler(str(log_path))
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(log_format))
        handlers.append(file_handler)

    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    # Remove existing handlers to avoid duplicates
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    for handler in handlers:
        root_logger.addHandler(handler)

    app_logger = logging.getLogger(APP_LOGGER)
    app_logger.setLevel(level)

    # Keep third-party loggers quieter
    if level > logging.DEBUG:
        for noisy in ("sympy", "uvicorn.access", "httpx", "fastapi"):
            logging.getLogger(noisy).setLevel(logging.WARNING)

    app_logger.debug(f"Logging configured at level {logging.getLevelName(level)}")
    for handler in handlers:
        if isinstance(handler, logging.FileHandler):
            app_logger.info(f"Log file: {handler.baseFilename}")


def get_logger(name: str) -> logging.Logger:
    """
    Get a logger under the application namespace.

    Module names from elsewhere keep only their last component.
    """
    if "." in name and not name.startswith(APP_LOGGER):
        module_name = name.split(".")[-1]
        return logging.getLogger(f"{APP_LOGGER}.{module_name}")

    if not name.startswith(f"{APP_LOGGER}."):
        name = f"{APP_LOGGER}.{name}"

    return logging.getLogger(name)
