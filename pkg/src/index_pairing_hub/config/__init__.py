"""
Configuration package for Index Pairing Hub.

This package manages application settings, environment variables,
and configuration loading in a structured and type-safe manner.
"""

from index_pairing_hub.config.settings import settings

__all__ = ["settings"]
