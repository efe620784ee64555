# src/index_pairing_hub/config/settings.py

"""
Configuration settings for Index Pairing Hub.

This module defines a structured hierarchy of settings using immutable dataclasses
that provide type safety, validation, and clear organization of configuration.
"""

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import List, Optional

from index_pairing_hub.config.environment import (
    get_env_var,
    get_env_var_bool,
    get_env_var_enum,
    get_env_var_float,
    get_env_var_int,
    get_env_var_list,
)
from index_pairing_hub.domain.conventions import (
    BernoulliConvention,
    NormReading,
    SignConvention,
    SubscriptVariant,
)

logger = logging.getLogger("index_pairing_hub.config")

PACKAGED_CATALOG_DIR = Path(__file__).resolve().parent.parent / "catalog_data"


@dataclass(frozen=True)
class ComputationSettings:
    """Tolerances, enumeration bounds and convention flags for the math core."""

    zero_tolerance: float = 1e-9
    near_integer_tolerance: float = 1e-6
    weyl_group_bound: int = 100_000
    root_closure_bound: int = 2_000
    decompose_bound: int = 10_000
    sign_convention: SignConvention = SignConvention.MINUS_EXP
    bernoulli: BernoulliConvention = BernoulliConvention.CLASSICAL
    subscript_variant: SubscriptVariant = SubscriptVariant.DISPLAY
    norm_reading: NormReading = NormReading.RESTRICTED_ROOT

    @classmethod
    def from_environment(cls) -> "ComputationSettings":
        return cls(
            zero_tolerance=get_env_var_float("INDEX_ZERO_TOLERANCE", cls.zero_tolerance),
            near_integer_tolerance=get_env_var_float(
                "INDEX_NEAR_INTEGER_TOLERANCE", cls.near_integer_tolerance
            ),
            weyl_group_bound=get_env_var_int("INDEX_WEYL_GROUP_BOUND", cls.weyl_group_bound),
            root_closure_bound=get_env_var_int(
                "INDEX_ROOT_CLOSURE_BOUND", cls.root_closure_bound
            ),
            decompose_bound=get_env_var_int("INDEX_DECOMPOSE_BOUND", cls.decompose_bound),
            sign_convention=get_env_var_enum(
                "INDEX_SIGN_CONVENTION", SignConvention, cls.sign_convention
            ),
            bernoulli=get_env_var_enum("INDEX_BERNOULLI", BernoulliConvention, cls.bernoulli),
            subscript_variant=get_env_var_enum(
                "INDEX_SUBSCRIPT_VARIANT", SubscriptVariant, cls.subscript_variant
            ),
            norm_reading=get_env_var_enum("INDEX_NORM_READING", NormReading, cls.norm_reading),
        )

    def with_overrides(
        self,
        sign_convention: Optional[SignConvention] = None,
        bernoulli: Optional[BernoulliConvention] = None,
        subscript_variant: Optional[SubscriptVariant] = None,
        norm_reading: Optional[NormReading] = None,
    ) -> "ComputationSettings":
        """Copy with any non-None flag replaced (per-query overrides)."""
        return replace(
            self,
            sign_convention=sign_convention or self.sign_convention,
            bernoulli=bernoulli or self.bernoulli,
            subscript_variant=subscript_variant or self.subscript_variant,
            norm_reading=norm_reading or self.norm_reading,
        )


@dataclass(frozen=True)
class CatalogSettings:
    """Where the shipped group specifications live."""

    catalog_dir: str = str(PACKAGED_CATALOG_DIR)

    @classmethod
    def from_environment(cls) -> "CatalogSettings":
        return cls(catalog_dir=get_env_var("INDEX_CATALOG_DIR", cls.catalog_dir))


@dataclass(frozen=True)
class AppSettings:
    """Main application settings container."""

    # Basic application info
    app_name: str = "Index Pairing Hub API"
    description: str = "Exact evaluation of orbital-integral index pairings"
    version: str = "0.1.0"

    # Environment and server settings
    debug: bool = False
    log_level: str = "INFO"
    log_to_file: bool = False
    environment: str = "development"
    host: str = "0.0.0.0"
    port: int = 8000
    api_version: str = "v1"
    cors_origins: List[str] = field(default_factory=list)

    # Component-specific settings
    computation: ComputationSettings = field(default_factory=ComputationSettings.from_environment)
    catalog: CatalogSettings = field(default_factory=CatalogSettings.from_environment)

    @classmethod
    def from_environment(cls) -> "AppSettings":
        try:
            return cls(
                app_name=get_env_var("APP_NAME", cls.app_name),
                description=get_env_var("APP_DESCRIPTION", cls.description),
                version=get_env_var("APP_VERSION", cls.version),
                debug=get_env_var_bool("DEBUG", cls.debug),
                log_level=get_env_var("LOG_LEVEL", cls.log_level),
                log_to_file=get_env_var_bool("LOG_TO_FILE", cls.log_to_file),
                environment=get_env_var("ENVIRONMENT", cls.environment),
                host=get_env_var("HOST", cls.host),
                port=get_env_var_int("PORT", cls.port),
                api_version=get_env_var("API_VERSION", cls.api_version),
                cors_origins=get_env_var_list("CORS_ORIGINS"),
            )
        except Exception as e:
            logger.error(f"Error loading environment settings: {e}. Falling back to defaults.", exc_info=True)
            return cls()


try:
    settings = AppSettings.from_environment()
    logger.debug(f"Loaded settings for environment: {settings.environment}")
except Exception as e:
    logger.critical(f"Unrecoverable error loading AppSettings: {e}", exc_info=True)
    settings = AppSettings()
