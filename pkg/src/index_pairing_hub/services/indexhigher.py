"""
Higher orbital integrals attached to maximal cuspidal parabolics P = MAN.

The K-type W is restricted to K∩M after twisting by the spinor module
of 𝔨/(𝔨∩𝔪); every K∩M-type λ_U with signed multiplicity m_U then
contributes an orbital integral computed at the level of M.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from index_pairing_hub.config.settings import ComputationSettings, settings
from index_pairing_hub.domain.charalg import (
    ElementDescriptor,
    LaurentChar,
    decompose,
    eval_character,
    eval_exp,
    irr_character,
    spin_graded_character,
    weyl_dim,
)
from index_pairing_hub.domain.conventions import ElementKind
from index_pairing_hub.domain.errors import (
    InternalError,
    InvalidRootDatum,
    NotSupported,
    RankMismatch,
    RequiresMaximal,
    WrongElementKind,
)
from index_pairing_hub.domain.rootsys import SymmetricPair, centralizer_subsystem
from index_pairing_hub.domain.schema import ElementSpec
from index_pairing_hub.domain.weights import WeightVec
from index_pairing_hub.domain.weyl import compact_weyl
from index_pairing_hub.services.indexss import (
    DiracInput,
    classify_element,
    coset_sum_terms,
    formal_degree,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LeviData:
    """A θ-stable Levi M ⊇ T of G, described by its roots inside those of G."""

    name: str
    base: SymmetricPair
    m_pair: SymmetricPair
    maximal: bool
    note: Optional[str] = None

    @classmethod
    def from_indices(
        cls,
        base: SymmetricPair,
        name: str,
        indices: Sequence[int],
        maximal: bool = True,
        note: Optional[str] = None,
    ) -> "LeviData":
        """
        Raises:
            InvalidRootDatum: index out of range or a root set that is not
                closed under its own reflections.
        """
        positives = base.positive_roots
        bad = [i for i in indices if not 0 <= i < len(positives)]
        if bad:
            raise InvalidRootDatum("Levi root index out of range", levi=name, indices=bad)
        chosen = {positives[i].vec for i in indices}
        m_pair = base.sub_pair(
            f"{base.name}:{name}", lambda r: r.vec in chosen or -r.vec in chosen
        )
        vectors = m_pair.root_vectors
        for a in m_pair.roots:
            for b in m_pair.roots:
                if base.form.reflect(b.vec, a.vec) not in vectors:
                    raise InvalidRootDatum(
                        "Levi roots are not closed under reflections", levi=name
                    )
        return cls(name, base, m_pair, maximal, note)

    @property
    def spin_roots(self) -> Tuple[WeightVec, ...]:
        """R+(K) ∖ R+(K∩M)."""
        inside = set(self.m_pair.compact_positive)
        return tuple(a for a in self.base.compact_positive if a not in inside)


@dataclass(frozen=True)
class DecompTerm:
    weight: WeightVec
    multiplicity: int


@dataclass(frozen=True)
class HigherContribution:
    value: complex
    case: str
    terms: Tuple[Tuple[DecompTerm, complex], ...] = ()


def _computation(computation: Optional[ComputationSettings]) -> ComputationSettings:
    return computation or settings.computation


def knm_spin_character(levi: LeviData) -> LaurentChar:
    """Graded character of the spinor module of 𝔨/(𝔨∩𝔪)."""
    return spin_graded_character(levi.spin_roots, levi.base.rank)


def twisted_character(inp: DiracInput, levi: LeviData,
                      computation: Optional[ComputationSettings] = None) -> LaurentChar:
    """χ_{Δ_{𝔨/𝔨∩𝔪}} · χ_W as a Laurent polynomial on T."""
    comp = _computation(computation)
    base = inp.pair
    w_k = compact_weyl(base, comp.weyl_group_bound)
    chi_w = irr_character(inp.lam, base.compact_positive, w_k, base.rho_c, base.form)
    return knm_spin_character(levi) * chi_w


def mU_decomposition(
    inp: DiracInput,
    levi: LeviData,
    computation: Optional[ComputationSettings] = None,
) -> List[DecompTerm]:
    """
    K∩M-types λ_U and signed multiplicities m_U of Δ_{𝔨/𝔨∩𝔪} ⊗ W.

    Raises:
        RequiresMaximal: for a non-maximal Levi.
        InternalError: the branched dimensions do not add up to dim(Δ ⊗ W).
    """
    if not levi.maximal:
        raise RequiresMaximal("Branching is only defined for maximal Levis", levi=levi.name)
    comp = _computation(computation)
    m = levi.m_pair
    product = twisted_character(inp, levi, comp)
    w_km = compact_weyl(m, comp.weyl_group_bound)
    pieces = decompose(product, m.compact_positive, w_km, m.rho_c, m.form, comp.decompose_bound)
    terms = [DecompTerm(weight, mult) for weight, mult in pieces]

    check = sum(t.multiplicity * weyl_dim(t.weight, m.compact_positive, m.rho_c, m.form)
                for t in terms)
    if check != product.dimension():
        raise InternalError(
            "Branching dimensions disagree",
            levi=levi.name,
            branched=check,
            expected=product.dimension(),
        )
    logger.debug("Levi %s: %d K∩M-types", levi.name, len(terms))
    return terms


def classify_in_levi(levi: LeviData, spec: ElementSpec) -> ElementDescriptor:
    """
    Classify an element of M: central and elliptic are judged by the roots
    of M, while X is checked against the torus of G.

    An element claimed central is accepted when it centralizes M even if it
    is not central in G.

    Raises:
        InvalidInput: malformed X or X outside the torus of G.
        MisclassifiedElement: a "central" element that is not central in M.
    """
    return classify_element(levi.m_pair, spec, ambient=levi.base)


def _central_in_m_value(m: SymmetricPair, weight: WeightVec, gamma: ElementDescriptor) -> complex:
    degree = formal_degree(weight + m.rho_c, m)
    return eval_exp(weight - m.rho_n, gamma.torus) * float(degree)


def higher_pairing(
    inp: DiracInput,
    levi: LeviData,
    gamma: ElementDescriptor,
    computation: Optional[ComputationSettings] = None,
) -> HigherContribution:
    """
    Φ_{P,γ}(ind_G D_W).

    Zero for non-maximal Levis and for elements hyperbolic in M. For γ
    central in M each λ_U contributes e^{λ_U−ρ^M_n}(γ)·d^M_{λ_U+ρ^M_c};
    otherwise each λ_U contributes the elliptic orbital integral of M.
    """
    if not levi.maximal:
        return HigherContribution(complex(0), "non_maximal")
    if gamma.kind == ElementKind.HYPERBOLIC:
        return HigherContribution(complex(0), "hyperbolic")
    if gamma.torus is None:
        raise WrongElementKind("Higher pairing needs an element of the compact torus")
    comp = _computation(computation)
    m = levi.m_pair
    if not m.equal_rank:
        raise RankMismatch("Levi lacks equal-rank data", levi=levi.name)

    decomposition = mU_decomposition(inp, levi, comp)
    central = gamma.torus.is_central(m.positive_vectors)
    evaluated = []
    for term in decomposition:
        if central:
            value = _central_in_m_value(m, term.weight, gamma)
        else:
            value = sum(
                (t.value for t in coset_sum_terms(m, term.weight, gamma.torus, comp)),
                complex(0),
            )
        evaluated.append((term, value))
    total = sum((t.multiplicity * v for t, v in evaluated), complex(0))
    case = "central_in_m" if central else "elliptic_in_m"
    logger.debug("Higher pairing on levi %s (%s): %s", levi.name, case, total)
    return HigherContribution(total, case, tuple(evaluated))


def dense_powers_higher_value(
    inp: DiracInput,
    levi: LeviData,
    gamma: ElementDescriptor,
    computation: Optional[ComputationSettings] = None,
) -> complex:
    """
    Closed form for K∩M = T and γ regular in M:

        (−1)^{dim M/(K∩M) / 2} χ_{Δ_{𝔨/𝔨∩𝔪}}(γ) χ_W(γ) / χ_{Δ_{𝔭∩𝔪}}(γ)

    Raises:
        NotSupported: if K∩M has roots or γ is singular for M.
    """
    m = levi.m_pair
    if m.compact_positive:
        raise NotSupported("Closed form needs K∩M = T", levi=levi.name)
    if gamma.torus is None:
        raise WrongElementKind("Closed form needs an element of the compact torus")
    if centralizer_subsystem(m, gamma.torus.X).roots:
        raise NotSupported("Closed form needs γ regular for M", levi=levi.name)
    numerator = eval_character(twisted_character(inp, levi, computation), gamma.torus)
    denominator = eval_character(
        spin_graded_character(m.noncompact_positive, m.rank), gamma.torus
    )
    return (-1) ** (m.dim_GK // 2) * numerator / denominator
