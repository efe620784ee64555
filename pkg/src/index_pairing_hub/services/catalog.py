"""Group catalog service: shipped JSON group specifications and user group files."""

import json
import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import ValidationError

from index_pairing_hub.config.settings import ComputationSettings, settings
from index_pairing_hub.domain.errors import InvalidInput, InvalidRootDatum, UnknownGroup
from index_pairing_hub.domain.rootsys import SymmetricPair, build_pair, validate_pair
from index_pairing_hub.domain.schema import GroupSpec
from index_pairing_hub.domain.weights import BilinearForm, WeightVec
from index_pairing_hub.services.indexhigher import LeviData
from index_pairing_hub.services.indexnonss import RankOneData
from index_pairing_hub.utils.helpers import load_json_file

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CatalogEntry:
    """A validated group: root datum, optional rank-one data and Levis."""

    pair: SymmetricPair
    rank_one: Optional[RankOneData]
    levis: Tuple[LeviData, ...]
    notes: Tuple[str, ...]
    spec: GroupSpec

    @property
    def name(self) -> str:
        return self.pair.name

    def levi(self, name: str) -> LeviData:
        for levi in self.levis:
            if levi.name == name:
                return levi
        known = ", ".join(l.name for l in self.levis) or "none"
        raise InvalidInput(f"Unknown levi '{name}' for {self.name} (known: {known})")


def build_entry(
    spec: GroupSpec, computation: Optional[ComputationSettings] = None
) -> CatalogEntry:
    """
    Generate and validate the root datum described by ``spec``.

    Raises:
        InvalidRootDatum: if generation fails or validate_pair reports violations.
    """
    comp = computation or settings.computation
    form = BilinearForm.from_rows(spec.gram)
    simple = [WeightVec.of(r) for r in spec.simple_roots]
    pair = build_pair(
        spec.name,
        simple,
        form,
        spec.compact_roots,
        equal_rank=spec.equal_rank,
        bound=comp.root_closure_bound,
    )
    violations = validate_pair(pair)
    if violations:
        raise InvalidRootDatum(
            f"Group {spec.name} fails validation",
            violations=[v.code for v in violations],
        )
    rank_one = RankOneData.from_spec(pair, spec.rank_one) if spec.rank_one else None
    levis = tuple(
        LeviData.from_indices(pair, l.name, l.m_root_indices, l.maximal, l.note)
        for l in spec.levis
    )
    logger.debug(
        "Built %s: %d positive roots, dim G/K = %d",
        spec.name, len(pair.positive_roots), pair.dim_GK,
    )
    return CatalogEntry(pair, rank_one, levis, tuple(spec.notes), spec)


def parse_group_spec(data: object, source: str = "<input>") -> GroupSpec:
    try:
        return GroupSpec.model_validate(data)
    except ValidationError as e:
        raise InvalidInput(f"Malformed group specification in {source}: {e}") from e


def load_group_file(path: Union[str, Path]) -> CatalogEntry:
    """Load a user-supplied group specification (same schema as the catalog)."""
    try:
        data = load_json_file(path)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidInput(f"Cannot read group file {path}: {e}") from e
    return build_entry(parse_group_spec(data, str(path)))


class GroupCatalog:
    """Directory of ``<name>.json`` group specifications."""

    def __init__(
        self,
        catalog_dir: Optional[Union[str, Path]] = None,
        computation: Optional[ComputationSettings] = None,
    ):
        self.catalog_dir = Path(catalog_dir or settings.catalog.catalog_dir)
        self.computation = computation
        self._entries: Dict[str, CatalogEntry] = {}

    def names(self) -> List[str]:
        if not self.catalog_dir.is_dir():
            logger.warning(f"Catalog directory not found: {self.catalog_dir}")
            return []
        return sorted(p.stem for p in self.catalog_dir.glob("*.json"))

    def spec(self, name: str) -> GroupSpec:
        path = self.catalog_dir / f"{name}.json"
        if name not in self.names():
            raise UnknownGroup(f"Unknown group '{name}'", known=", ".join(self.names()))
        return parse_group_spec(load_json_file(path), str(path))

    def lookup(self, name: str) -> CatalogEntry:
        """
        Raises:
            UnknownGroup: if no catalog file carries that name.
        """
        if name not in self._entries:
            self._entries[name] = build_entry(self.spec(name), self.computation)
        return self._entries[name]


@lru_cache(maxsize=1)
def default_catalog() -> GroupCatalog:
    return GroupCatalog()


def catalog_list() -> List[str]:
    return default_catalog().names()


def catalog_lookup(name: str) -> CatalogEntry:
    return default_catalog().lookup(name)
