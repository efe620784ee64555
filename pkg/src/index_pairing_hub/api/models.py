# src/index_pairing_hub/api/models.py

"""
Data models for the Index Pairing Hub API.

Query and report bodies reuse the domain models (QuerySpec, IndexReport);
this module holds the HTTP-only envelopes.
"""

import datetime
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from index_pairing_hub.domain.schema import Violation


class CatalogListResponse(BaseModel):
    """Names of every group in the catalog."""

    groups: List[str] = Field(..., description="Catalog names, sorted")

    model_config = ConfigDict(
        json_schema_extra={"example": {"groups": ["so21", "su11", "su21"]}}
    )


class CatalogSummary(BaseModel):
    """Root datum summary of a single catalog group."""

    name: str
    rank: int
    dim_GK: int = Field(..., description="dim G/K")
    positive_roots: List[List[str]]
    compact_positive: List[List[str]]
    rho: List[str]
    rho_c: List[str]
    rho_n: List[str]
    real_rank_one: bool = Field(..., description="Whether rank-one data is present")
    levis: List[str] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    violations: List[Violation] = Field(
        default_factory=list, description="Structural checks; empty for a valid group"
    )

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "name": "su11",
                "rank": 1,
                "dim_GK": 2,
                "positive_roots": [["1"]],
                "compact_positive": [],
                "rho": ["1/2"],
                "rho_c": ["0"],
                "rho_n": ["1/2"],
                "real_rank_one": True,
                "levis": ["G", "T", "nonmax"],
                "notes": [],
                "violations": [],
            }
        }
    )


class ErrorResponse(BaseModel):
    """Standardized error response."""

    detail: str = Field(..., description="Error message")
    code: str = Field(..., description="Machine‑readable error code")
    timestamp: datetime.datetime = Field(default_factory=datetime.datetime.utcnow)
    path: Optional[str] = Field(None, description="The API path that generated the error")
    context: Dict[str, str] = Field(default_factory=dict, description="Error details")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "detail": "Unknown group 'xx99'",
                "code": "UNKNOWN_GROUP",
                "timestamp": "2025-04-17T12:00:00Z",
                "path": "/v1/catalog/xx99",
                "context": {},
            }
        }
    )


class HealthCheckResponse(BaseModel):
    """Model for health check responses."""

    status: str = Field(..., description="Service status")
    version: str = Field(..., description="API version")
    dependencies: Dict[str, str] = Field(..., description="Status of dependencies")
    timestamp: datetime.datetime = Field(..., description="Timestamp of this check")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "status": "healthy",
                "version": "0.1.0",
                "dependencies": {"catalog": "available"},
                "timestamp": "2025-04-17T12:00:00Z",
            }
        }
    )
