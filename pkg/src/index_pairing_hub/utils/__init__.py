"""
Utility functions and helpers for Index Pairing Hub.

This package provides common utilities, error handling patterns,
logging configuration, and helper functions used throughout the application.
"""

from index_pairing_hub.utils.helpers import (
    complex_pair,
    load_json_file,
    parse_json_argument,
    save_json_file,
)
from index_pairing_hub.utils.logging import configure_logging
from index_pairing_hub.utils.result import Error, Result, Success

__all__ = [
    # File utilities
    "load_json_file", "save_json_file",

    # Argument and number formatting
    "parse_json_argument", "complex_pair",

    # Application configuration
    "configure_logging",

    # Error handling
    "Result", "Success", "Error",
]
