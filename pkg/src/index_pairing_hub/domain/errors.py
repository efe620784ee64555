"""
Domain exceptions for Index Pairing Hub.

Every error raised by the math core derives from ``IndexHubError`` and
carries a stable, machine-readable ``code``. Services convert these into
``Error`` results; the CLI and API map them onto exit codes and HTTP
statuses.
"""

from typing import Any, Dict


class IndexHubError(Exception):
    """Base class for all domain errors."""

    code: str = "INDEX_HUB_ERROR"

    def __init__(self, message: str, **context: Any):
        super().__init__(message)
        self.message = message
        self.context: Dict[str, Any] = context

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"code": self.code, "message": self.message}
        if self.context:
            payload["context"] = {k: str(v) for k, v in self.context.items()}
        return payload


class InvalidInput(IndexHubError):
    """Malformed user input (rational strings, JSON shape, vector lengths)."""

    code = "INVALID_INPUT"


class InvalidRootDatum(IndexHubError):
    code = "INVALID_ROOT_DATUM"


class GroupTooLarge(IndexHubError):
    code = "GROUP_TOO_LARGE"


class NotASubgroup(IndexHubError):
    code = "NOT_A_SUBGROUP"


class NotDominant(IndexHubError):
    code = "NOT_DOMINANT"


class NotIntegral(IndexHubError):
    code = "NOT_INTEGRAL"


class NotInvariant(IndexHubError):
    code = "NOT_INVARIANT"


class InternalError(IndexHubError):
    code = "INTERNAL_ERROR"


class WrongElementKind(IndexHubError):
    code = "WRONG_ELEMENT_KIND"


class RankMismatch(IndexHubError):
    code = "RANK_MISMATCH"


class MisclassifiedElement(IndexHubError):
    code = "MISCLASSIFIED_ELEMENT"


class RequiresMaximal(IndexHubError):
    code = "REQUIRES_MAXIMAL"


class MissingGammaData(IndexHubError):
    code = "MISSING_GAMMA_DATA"


class DegenerateZ0(IndexHubError):
    code = "DEGENERATE_Z0"


class NonIntegralK(IndexHubError):
    code = "NON_INTEGRAL_K"


class AmbiguousSign(IndexHubError):
    code = "AMBIGUOUS_SIGN"


class NotSupported(IndexHubError):
    code = "NOT_SUPPORTED"


class UnknownGroup(IndexHubError):
    code = "UNKNOWN_GROUP"


class NotRankOne(IndexHubError):
    code = "NOT_RANK_ONE"
