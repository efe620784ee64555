"""Test configuration and fixtures."""

import json
from pathlib import Path
from typing import Dict

import pytest

from index_pairing_hub.config.settings import PACKAGED_CATALOG_DIR, ComputationSettings
from index_pairing_hub.domain.schema import GammaData
from index_pairing_hub.services.catalog import CatalogEntry, GroupCatalog

FIXTURES_DIR = Path(__file__).parent / "fixtures"


def load_fixture(name: str) -> Dict:
    """Parsed JSON fixture from tests/fixtures."""
    with open(FIXTURES_DIR / name, "r", encoding="utf-8") as f:
        return json.load(f)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture
def computation() -> ComputationSettings:
    """Default flags, independent of the process environment."""
    return ComputationSettings()


@pytest.fixture
def catalog(computation) -> GroupCatalog:
    """The packaged group catalog."""
    return GroupCatalog(PACKAGED_CATALOG_DIR, computation)


@pytest.fixture
def su11(catalog) -> CatalogEntry:
    return catalog.lookup("su11")


@pytest.fixture
def su21(catalog) -> CatalogEntry:
    return catalog.lookup("su21")


@pytest.fixture
def so41(catalog) -> CatalogEntry:
    return catalog.lookup("so41")


@pytest.fixture
def gamma_central() -> GammaData:
    """One central class of volume 1, everything else zero."""
    return GammaData.model_validate(load_fixture("gamma_central.json"))


@pytest.fixture
def sign_resolution() -> Dict:
    """Sign convention recorded for the closed-form elliptic formula."""
    return load_fixture("sign_resolution.json")
