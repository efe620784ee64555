"""
Adapter functions between service objects and API payloads.

Catalog entries become ``CatalogSummary`` bodies and error codes become
HTTP responses.
"""

from typing import Any, Dict, Optional

from fastapi import status
from fastapi.responses import JSONResponse

from index_pairing_hub.api.models import CatalogSummary, ErrorResponse
from index_pairing_hub.domain.rootsys import validate_pair
from index_pairing_hub.services.catalog import CatalogEntry
from index_pairing_hub.utils.result import Error

STATUS_BY_CODE = {
    "INVALID_INPUT": status.HTTP_422_UNPROCESSABLE_ENTITY,
    "UNKNOWN_GROUP": status.HTTP_404_NOT_FOUND,
    "internal": status.HTTP_500_INTERNAL_SERVER_ERROR,
}


def status_for_code(code: str) -> int:
    """Domain errors not listed map to 400."""
    return STATUS_BY_CODE.get(code, status.HTTP_400_BAD_REQUEST)


def entry_to_summary(entry: CatalogEntry) -> CatalogSummary:
    pair = entry.pair
    return CatalogSummary(
        name=entry.name,
        rank=pair.rank,
        dim_GK=pair.dim_GK,
        positive_roots=[a.to_strings() for a in pair.positive_vectors],
        compact_positive=[a.to_strings() for a in pair.compact_positive],
        rho=pair.rho.to_strings(),
        rho_c=pair.rho_c.to_strings(),
        rho_n=pair.rho_n.to_strings(),
        real_rank_one=entry.rank_one is not None,
        levis=[levi.name for levi in entry.levis],
        notes=list(entry.notes),
        violations=validate_pair(pair),
    )


def error_payload(code: str, message: str, path: str, context: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    """ErrorResponse as a JSON-ready dict."""
    return ErrorResponse(
        detail=message,
        code=code,
        path=path,
        context={k: str(v) for k, v in (context or {}).items()},
    ).model_dump(mode="json")


def error_to_response(error: Error, path: str) -> JSONResponse:
    return JSONResponse(
        status_code=status_for_code(error.code),
        content=error_payload(error.code, error.error, path, error.details),
    )
