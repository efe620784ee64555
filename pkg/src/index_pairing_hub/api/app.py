# src/index_pairing_hub/api/app.py

"""
Main application module for the Index Pairing Hub API.

Initializes the FastAPI app, configures middleware, exception handlers,
logging, and mounts API endpoints.
"""

import logging
import uuid
from contextlib import asynccontextmanager

from fastapi import FastAPI, HTTPException, Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from index_pairing_hub.api.adapters import error_payload, status_for_code
from index_pairing_hub.api.routes import main_router
from index_pairing_hub.config.settings import settings
from index_pairing_hub.domain.errors import IndexHubError
from index_pairing_hub.services.catalog import GroupCatalog
from index_pairing_hub.services.processor import QueryService
from index_pairing_hub.utils.logging import get_logger

logger = get_logger(__name__)


def _register_exception_handlers(app: FastAPI) -> None:
    """
    Attach global exception handlers for validation errors, domain errors,
    HTTP exceptions and uncaught exceptions.
    """

    @app.exception_handler(RequestValidationError)
    async def _handle_request_validation(
        request: Request, exc: RequestValidationError
    ) -> JSONResponse:
        correlation_id = getattr(request.state, "correlation_id", "N/A")
        errors = "; ".join(
            f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in exc.errors()
        )
        logger.warning(
            "Validation failed",
            extra={"correlation_id": correlation_id, "errors": errors, "path": request.url.path},
        )
        return JSONResponse(
            status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
            content=error_payload("INVALID_INPUT", errors, request.url.path),
        )

    @app.exception_handler(IndexHubError)
    async def _handle_domain_error(request: Request, exc: IndexHubError) -> JSONResponse:
        status_code = status_for_code(exc.code)
        logger.warning(
            "Domain error",
            extra={"code": exc.code, "detail": exc.message, "path": request.url.path},
        )
        return JSONResponse(
            status_code=status_code,
            content=error_payload(exc.code, exc.message, request.url.path, exc.context),
        )

    @app.exception_handler(HTTPException)
    async def _handle_http_exception(request: Request, exc: HTTPException) -> JSONResponse:
        level = logging.ERROR if exc.status_code >= 500 else logging.WARNING
        logger.log(
            level,
            "HTTP error",
            extra={"status_code": exc.status_code, "detail": exc.detail, "path": request.url.path},
        )
        return JSONResponse(
            status_code=exc.status_code,
            content=error_payload(f"HTTP_{exc.status_code}", str(exc.detail), request.url.path),
            headers=exc.headers,
        )

    @app.exception_handler(Exception)
    async def _handle_unexpected_exception(request: Request, exc: Exception) -> JSONResponse:
        logger.exception(
            "Unhandled exception",
            extra={"path": request.url.path, "method": request.method},
        )
        return JSONResponse(
            status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
            content=error_payload("INTERNAL_SERVER_ERROR", "Internal server error", request.url.path),
        )


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Build the catalog-backed query service once per process."""
    logger.info("Starting %s v%s", settings.app_name, settings.version)
    catalog = GroupCatalog(settings.catalog.catalog_dir, settings.computation)
    app.state.query_service = QueryService(catalog, settings.computation)
    logger.info("Catalog at %s with %d groups", catalog.catalog_dir, len(catalog.names()))

    yield

    logger.info("Shutting down %s", settings.app_name)


def create_app() -> FastAPI:
    """
    Construct and configure the FastAPI application.
    """
    app = FastAPI(
        title=settings.app_name,
        description=settings.description,
        version=settings.version,
        docs_url="/docs" if settings.environment != "production" else None,
        redoc_url="/redoc" if settings.environment != "production" else None,
        openapi_url="/openapi.json" if settings.environment != "production" else None,
        lifespan=lifespan,
    )

    app.add_middleware(
        CORSMiddleware,
        allow_origins=settings.cors_origins or ["*"],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.middleware("http")
    async def add_correlation_id(request: Request, call_next):
        correlation_id = request.headers.get("X-Correlation-ID") or str(uuid.uuid4())
        request.state.correlation_id = correlation_id
        response = await call_next(request)
        response.headers["X-Correlation-ID"] = correlation_id
        return response

    _register_exception_handlers(app)
    app.include_router(main_router)

    return app


app = create_app()


def start(
    host: str | None = None,
    port: int | None = None,
    reload: bool = False,
    workers: int = 1,
    log_level: str | None = None,
) -> None:
    """
    Console‐script entrypoint.
    Launches Uvicorn on our `app` instance.
    """
    import uvicorn

    from index_pairing_hub.utils.logging import configure_logging

    actual_log = (log_level or settings.log_level).lower()
    configure_logging(log_level=actual_log)
    actual_host = host or settings.host
    actual_port = port or settings.port
    actual_reload = reload and settings.debug

    logger.info(
        "Starting HTTP API on %s:%d (reload=%s, workers=%d) → log_level=%s",
        actual_host, actual_port, actual_reload, workers, actual_log,
    )
    uvicorn.run(
        "index_pairing_hub.api.app:app",
        host=actual_host,
        port=actual_port,
        reload=actual_reload,
        log_level=actual_log,
        workers=workers,
    )
