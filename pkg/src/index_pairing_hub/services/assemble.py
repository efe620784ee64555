"""
Trace-formula assembly of ind(D_W^Γ) for real rank one groups.

    ind = Σ_(γ) vol(Γ_γ\\G_γ)·τ_γ + N_2λ-term + C_λ/(A(𝔫_λ)|λ|)·τ_λ
          − ¼·τ_res + τ_rem

The N_2λ term already carries C_2(Γ), so C_2λ(Γ) is not consumed a
second time.
"""

import logging
from typing import List, Optional

from index_pairing_hub.config.settings import ComputationSettings, settings
from index_pairing_hub.domain.conventions import QueryMode
from index_pairing_hub.domain.errors import NotRankOne
from index_pairing_hub.domain.schema import ContributionTerm, GammaData, IndexReport
from index_pairing_hub.services.catalog import CatalogEntry
from index_pairing_hub.services.indexnonss import (
    RankOneData,
    tau_lambda_coefficient,
    tau_lambda_contribution,
    tau_n0_contribution,
    tau_rem_contribution,
    tau_res_contribution,
)
from index_pairing_hub.services.indexss import (
    DiracInput,
    classify_element,
    evaluate_semisimple,
)
from index_pairing_hub.utils.helpers import complex_pair

logger = logging.getLogger(__name__)

RES_COEFFICIENT = -0.25


def make_term(
    label: str, value: complex, coefficient: float = 1.0, note: Optional[str] = None
) -> ContributionTerm:
    """
    Build one report line with its weighted value.

    Args:
        label: Term name as shown in reports
        value: Unweighted value
        coefficient: Weight the value is multiplied by
        note: Free-text remark carried into the report

    Returns:
        The term with noise below 1e-12 flushed to zero
    """
    return ContributionTerm(
        label=label,
        coefficient=coefficient,
        value=complex_pair(complex(value)),
        weighted=complex_pair(coefficient * complex(value)),
        note=note,
    )


def rank_one_data(entry: CatalogEntry) -> RankOneData:
    """
    Raises:
        NotRankOne: if the catalog entry carries no rank one data.
    """
    if entry.rank_one is None:
        raise NotRankOne(f"{entry.name} carries no real rank one data", group=entry.name)
    return entry.rank_one


def semisimple_terms(
    inp: DiracInput, gd: GammaData, computation: Optional[ComputationSettings] = None
) -> List[ContributionTerm]:
    """
    vol·τ_γ for every class listed in the Γ-data, in input order.

    Args:
        inp: Group and K-type
        gd: Γ-data supplying the classes and their volumes
        computation: Settings for the elliptic evaluator

    Returns:
        One term per class, labelled ss[i]:kind

    Raises:
        InvalidInput: a class with malformed torus coordinates.
        MisclassifiedElement: a class claimed central that is not.
    """
    terms = []
    for i, ss_class in enumerate(gd.ss_classes):
        gamma = classify_element(inp.pair, ss_class.element)
        contribution = evaluate_semisimple(inp, gamma, computation)
        label = f"ss[{i}]:{contribution.kind.value}"
        note = None
        if gamma.torus is not None:
            note = "X=" + ",".join(str(x) for x in gamma.torus.X)
        terms.append(make_term(label, contribution.value, ss_class.vol, note))
    return terms


def non_semisimple_terms(
    inp: DiracInput,
    entry: CatalogEntry,
    gd: GammaData,
    computation: Optional[ComputationSettings] = None,
) -> List[ContributionTerm]:
    """
    The four non-semisimple terms, labelled n0, lambda, res and rem.

    Raises:
        NotRankOne: if the entry has no rank one data.
        MissingGammaData: when a term needs a Γ-field that is absent.
    """
    comp = computation or settings.computation
    data = rank_one_data(entry)
    terms = [
        make_term("n0", tau_n0_contribution(inp, data, gd, comp), note="includes C_2(Γ)"),
        make_term(
            "lambda",
            tau_lambda_contribution(),
            tau_lambda_coefficient(inp, data, gd, comp),
        ),
        make_term("res", tau_res_contribution(inp, gd), RES_COEFFICIENT),
    ]
    if gd.l == 0:
        terms.append(make_term("rem", 0.0, note="no cusps"))
    else:
        terms.append(make_term("rem", tau_rem_contribution(inp, data, gd, comp)))
    return terms


def total_of(terms: List[ContributionTerm]) -> complex:
    """Sum of the weighted values."""
    return sum((complex(*t.weighted) for t in terms), complex(0))


def assemble_index(
    inp: DiracInput,
    entry: CatalogEntry,
    gd: GammaData,
    computation: Optional[ComputationSettings] = None,
) -> IndexReport:
    """
    Evaluate every term of the trace formula on the index and add them up.

    The near-integer check is reported, never enforced: it only holds
    when the Γ-data are mutually consistent.

    Args:
        inp: Group and K-type
        entry: Catalog entry; must carry rank one data
        gd: Γ-data
        computation: Settings; the global ones by default

    Returns:
        Report with every term, the total, the assembled index and the
        integrality deviation

    Raises:
        NotRankOne: if the entry has no rank one data.
        MissingGammaData: when a term needs a Γ-field that is absent.
    """
    comp = computation or settings.computation
    rank_one_data(entry)
    terms = semisimple_terms(inp, gd, comp) + non_semisimple_terms(inp, entry, gd, comp)
    total = total_of(terms)

    nearest = round(total.real)
    deviation = abs(total.real - nearest) + abs(total.imag)
    near_integer = deviation <= comp.near_integer_tolerance
    warnings = []
    if not near_integer:
        message = f"Assembled index {total.real:.9g} is not within tolerance of an integer"
        logger.warning("%s (deviation %.3g) for %s", message, deviation, entry.name)
        warnings.append(message)

    logger.info("Assembled index for %s, λ=%s: %s", entry.name, inp.lam, total)
    return IndexReport(
        group=entry.name,
        lambda_=inp.lam.to_strings(),
        mode=QueryMode.ASSEMBLE,
        sign_convention=comp.sign_convention,
        bernoulli=comp.bernoulli,
        terms=terms,
        total=complex_pair(total),
        assembled_index=complex_pair(total)[0],
        near_integer=near_integer,
        deviation=deviation,
        warnings=warnings,
    )

