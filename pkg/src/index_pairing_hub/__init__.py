# src/index_pairing_hub/__init__.py

"""
Index Pairing Hub - exact orbital-integral pairings of Dirac indices.

This package provides:
1. An exact math core (root data, Weyl groups, characters) under `domain`
2. Evaluators for semisimple, higher and non-semisimple contributions under `services`
3. A CLI (`index-hub`) and a FastAPI HTTP API (`index-api`)
"""

__version__ = "0.1.0"
__author__ = "Nedal Altiti"
__license__ = "MIT"

from index_pairing_hub.config.settings import settings
from index_pairing_hub.domain.schema import GammaData, IndexReport, QuerySpec

__all__ = [
    # Version info
    "__version__",
    "__author__",
    "__license__",

    # Schemas
    "QuerySpec",
    "GammaData",
    "IndexReport",

    # Settings
    "settings",
]
