"""Query processing service shared by the CLI and the HTTP API."""

import logging
from typing import List, Optional

from index_pairing_hub.config.settings import ComputationSettings, settings
from index_pairing_hub.domain.conventions import ElementKind, QueryMode
from index_pairing_hub.domain.errors import InvalidInput
from index_pairing_hub.domain.schema import (
    CosetDiagnostic,
    DecompositionEntry,
    ElementSpec,
    GammaData,
    IndexReport,
    QuerySpec,
)
from index_pairing_hub.domain.weights import WeightVec, to_fraction
from index_pairing_hub.services.assemble import (
    assemble_index,
    make_term,
    non_semisimple_terms,
    total_of,
)
from index_pairing_hub.services.catalog import CatalogEntry, GroupCatalog, build_entry, default_catalog
from index_pairing_hub.services.indexhigher import classify_in_levi, higher_pairing
from index_pairing_hub.services.indexss import (
    DiracInput,
    SsContribution,
    classify_element,
    evaluate_semisimple,
)
from index_pairing_hub.utils.helpers import complex_pair
from index_pairing_hub.utils.result import Result

logger = logging.getLogger(__name__)


class QueryService:
    """Resolves a QuerySpec against the catalog and runs the requested evaluator."""

    def __init__(
        self,
        catalog: Optional[GroupCatalog] = None,
        computation: Optional[ComputationSettings] = None,
    ):
        """
        Args:
            catalog: Group catalog; the packaged one by default
            computation: Base computation settings; per-query flags override them
        """
        self.catalog = catalog or default_catalog()
        self.computation = computation or settings.computation

    def run(self, query: QuerySpec) -> Result[IndexReport]:
        """
        Evaluate one query.

        Returns:
            Success with the report, or an Error carrying the domain error code
        """
        result: Result[IndexReport] = Result.try_operation(lambda: self.evaluate(query))
        if result.is_error():
            logger.error(f"Query on {query.group or 'inline group'} failed: {result}")
        return result

    def evaluate(self, query: QuerySpec) -> IndexReport:
        """Like ``run`` but raising domain errors."""
        comp = self.computation.with_overrides(
            sign_convention=query.sign_convention,
            bernoulli=query.bernoulli,
            subscript_variant=query.subscript_variant,
            norm_reading=query.norm_reading,
        )
        entry = self.resolve_entry(query, comp)
        lam = WeightVec(tuple(to_fraction(x) for x in query.lambda_))
        inp = DiracInput.create(entry.pair, lam)
        logger.debug("Running %s query on %s with λ=%s", query.mode.value, entry.name, lam)

        if query.mode == QueryMode.ORBITAL:
            report = self._orbital(inp, entry, query, comp)
        elif query.mode == QueryMode.HIGHER:
            report = self._higher(inp, entry, query, comp)
        elif query.mode == QueryMode.NONSS:
            report = self._nonss(inp, entry, query, comp)
        else:
            report = assemble_index(inp, entry, query.gamma or GammaData(), comp)
        logger.info("Completed %s query on %s: %s", query.mode.value, entry.name, report.total)
        return report

    def resolve_entry(self, query: QuerySpec, comp: ComputationSettings) -> CatalogEntry:
        if query.group_spec is not None:
            return build_entry(query.group_spec, comp)
        return self.catalog.lookup(query.group)

    def _base_report(
        self, inp: DiracInput, entry: CatalogEntry, mode: QueryMode, comp: ComputationSettings
    ) -> IndexReport:
        return IndexReport(
            group=entry.name,
            lambda_=inp.lam.to_strings(),
            mode=mode,
            sign_convention=comp.sign_convention,
            bernoulli=comp.bernoulli,
        )

    @staticmethod
    def _element(query: QuerySpec) -> ElementSpec:
        if query.element is None:
            raise InvalidInput(f"Mode '{query.mode.value}' needs an element")
        return query.element

    def _orbital(
        self, inp: DiracInput, entry: CatalogEntry, query: QuerySpec, comp: ComputationSettings
    ) -> IndexReport:
        gamma = classify_element(inp.pair, self._element(query))
        contribution = evaluate_semisimple(inp, gamma, comp)
        report = self._base_report(inp, entry, QueryMode.ORBITAL, comp)
        report.terms = [make_term(f"tau:{contribution.kind.value}", contribution.value)]
        report.total = complex_pair(contribution.value)
        if query.diagnostics and contribution.kind == ElementKind.ELLIPTIC:
            report.diagnostics = coset_diagnostics(contribution)
        if not contribution.paths_agree:
            report.warnings.append(
                f"Closed form under '{comp.sign_convention.value}' disagrees with the coset sum"
            )
        return report

    def _higher(
        self, inp: DiracInput, entry: CatalogEntry, query: QuerySpec, comp: ComputationSettings
    ) -> IndexReport:
        if query.levi is None:
            raise InvalidInput("Mode 'higher' needs a levi")
        levi = entry.levi(query.levi)
        gamma = classify_in_levi(levi, self._element(query))
        contribution = higher_pairing(inp, levi, gamma, comp)
        report = self._base_report(inp, entry, QueryMode.HIGHER, comp)
        if contribution.terms:
            report.terms = [
                make_term(f"U{term.weight}", value, float(term.multiplicity))
                for term, value in contribution.terms
            ]
            report.decomposition = [
                DecompositionEntry(weight=term.weight.to_strings(), multiplicity=term.multiplicity)
                for term, _ in contribution.terms
            ]
        else:
            report.terms = [make_term(contribution.case, contribution.value)]
        report.total = complex_pair(contribution.value)
        return report

    def _nonss(
        self, inp: DiracInput, entry: CatalogEntry, query: QuerySpec, comp: ComputationSettings
    ) -> IndexReport:
        terms = non_semisimple_terms(inp, entry, query.gamma or GammaData(), comp)
        report = self._base_report(inp, entry, QueryMode.NONSS, comp)
        report.terms = terms
        report.total = complex_pair(total_of(terms))
        return report


def coset_diagnostics(contribution: SsContribution) -> List[CosetDiagnostic]:
    """Per-coset breakdown of an elliptic orbital integral for the report."""
    return [
        CosetDiagnostic(
            coset_rep=term.rep.to_strings(),
            length=term.rep.length,
            det=term.rep.det,
            value=complex_pair(term.value),
        )
        for term in contribution.terms
    ]
