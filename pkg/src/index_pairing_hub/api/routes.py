# src/index_pairing_hub/api/routes.py

import logging
import time
from datetime import datetime
from typing import Union

from fastapi import APIRouter, Depends, HTTPException, Request
from fastapi.responses import JSONResponse

from index_pairing_hub.api.adapters import entry_to_summary, error_to_response
from index_pairing_hub.api.models import (
    CatalogListResponse,
    CatalogSummary,
    ErrorResponse,
    HealthCheckResponse,
)
from index_pairing_hub.config.settings import settings
from index_pairing_hub.domain.schema import IndexReport, QuerySpec
from index_pairing_hub.services.processor import QueryService

logger = logging.getLogger("index_pairing_hub.api")

api_prefix = settings.api_version
main_router = APIRouter(prefix=f"/{api_prefix}")


def get_query_service(request: Request) -> QueryService:
    """Injects the QueryService from application state."""
    service = getattr(request.app.state, "query_service", None)
    if service is None:
        logger.error("QueryService not found in application state.")
        raise HTTPException(status_code=500, detail="Internal server error: Query service not initialized")
    return service


# --- API Endpoints ---

@main_router.get(
    "/health",
    response_model=HealthCheckResponse,
    tags=["System"],
    summary="Check Service Health",
)
async def health_check(service: QueryService = Depends(get_query_service)) -> HealthCheckResponse:
    """Report whether the group catalog is readable."""
    deps = {"catalog": "available" if service.catalog.names() else "unavailable"}
    status = "healthy" if all(v == "available" for v in deps.values()) else "degraded"
    return HealthCheckResponse(
        status=status,
        version=settings.version,
        dependencies=deps,
        timestamp=datetime.utcnow(),
    )


@main_router.get(
    "/catalog",
    response_model=CatalogListResponse,
    tags=["Catalog"],
    summary="List Catalog Groups",
)
async def list_catalog(service: QueryService = Depends(get_query_service)) -> CatalogListResponse:
    return CatalogListResponse(groups=service.catalog.names())


@main_router.get(
    "/catalog/{name}",
    response_model=CatalogSummary,
    tags=["Catalog"],
    summary="Describe a Catalog Group",
    responses={404: {"model": ErrorResponse, "description": "Unknown group"}},
)
def describe_group(name: str, service: QueryService = Depends(get_query_service)) -> CatalogSummary:
    """Root datum summary plus the structural checks of the group."""
    return entry_to_summary(service.catalog.lookup(name))


@main_router.post(
    "/query",
    response_model=IndexReport,
    tags=["Index Pairings"],
    summary="Evaluate an Index Pairing",
    responses={
        400: {"model": ErrorResponse, "description": "Computation error"},
        404: {"model": ErrorResponse, "description": "Unknown group"},
        422: {"model": ErrorResponse, "description": "Malformed query"},
    },
)
def run_query(
    query: QuerySpec,
    request: Request,
    service: QueryService = Depends(get_query_service),
) -> Union[IndexReport, JSONResponse]:
    """Run an orbital, higher, non-semisimple or assembly query."""
    start_time = time.time()
    logger.info(f"Received /query request: mode={query.mode.value}, group={query.group}")

    result = service.run(query)
    if result.is_error():
        logger.warning(f"Query failed with {result.code}: {result.error}")
        return error_to_response(result, request.url.path)

    logger.info(f"Query completed in {time.time() - start_time:.3f}s")
    return result.unwrap()
