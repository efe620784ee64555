"""
Exact math core for Index Pairing Hub.

Root data of symmetric pairs, Weyl groups, Laurent characters and the
JSON-facing schemas, independent of the API or CLI layers.
"""

from index_pairing_hub.domain.errors import IndexHubError
from index_pairing_hub.domain.rootsys import SymmetricPair, build_pair, validate_pair
from index_pairing_hub.domain.weights import BilinearForm, WeightVec
from index_pairing_hub.domain.weyl import WeylGroup, compact_weyl, full_weyl

__all__ = [
    # Core types
    'WeightVec', 'BilinearForm', 'SymmetricPair', 'WeylGroup',

    # Constructors
    'build_pair', 'full_weyl', 'compact_weyl',

    # Checks
    'validate_pair',

    # Errors
    'IndexHubError',
]
