"""
Orbital integrals of the Dirac index at semisimple elements.

Central elements give e^{λ−ρ_n}(γ)·d^G_{λ+ρ_c}; hyperbolic elements give
zero; elliptic elements are evaluated by a finite sum over the cosets
W_{K_γ}\\W_K of compact Weyl groups. The same engine is reused at the
level of a Levi subgroup by the higher pairing evaluator.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from index_pairing_hub.config.settings import ComputationSettings, settings
from index_pairing_hub.domain.charalg import (
    ElementDescriptor,
    TorusElement,
    eval_character,
    eval_exp,
    parse_torus,
    weyl_denominator_value,
    weyl_numerator,
)
from index_pairing_hub.domain.conventions import ElementKind, SignConvention
from index_pairing_hub.domain.errors import (
    InternalError,
    InvalidInput,
    MisclassifiedElement,
    NotDominant,
    NotIntegral,
    NotSupported,
    RankMismatch,
    WrongElementKind,
)
from index_pairing_hub.domain.rootsys import (
    SymmetricPair,
    centralizer_subsystem,
    half_sum,
    in_coroot_span,
    is_dominant,
    is_integral,
)
from index_pairing_hub.domain.schema import ElementSpec
from index_pairing_hub.domain.weights import BilinearForm, WeightVec, to_fraction
from index_pairing_hub.domain.weyl import WeylElement, compact_weyl, coset_reps

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiracInput:
    """
    A symmetric pair together with the highest weight λ of the K-type W.

    Use ``DiracInput.create`` to build validated instances.
    """

    pair: SymmetricPair
    lam: WeightVec

    @classmethod
    def create(cls, pair: SymmetricPair, lam: WeightVec) -> "DiracInput":
        """
        Raises:
            InvalidInput: wrong number of coordinates.
            NotDominant: λ is not dominant for R+(K, T).
            NotIntegral: λ − ρ_n is not integral for the roots of G.
        """
        if lam.rank != pair.rank:
            raise InvalidInput(
                f"λ needs {pair.rank} coordinates, got {lam.rank}", group=pair.name
            )
        if not is_dominant(lam, pair.compact_positive, pair.form):
            raise NotDominant("λ is not dominant for the compact positive roots", weight=lam)
        if not is_integral(lam, pair.compact_positive, pair.form):
            raise NotIntegral("λ is not integral for the compact roots", weight=lam)
        if not is_integral(lam - pair.rho_n, pair.positive_vectors, pair.form):
            raise NotIntegral("λ − ρ_n is not an integral weight", weight=lam)
        return cls(pair, lam)

    @property
    def lambda_plus_rho_c(self) -> WeightVec:
        return self.lam + self.pair.rho_c


@dataclass(frozen=True)
class CosetTerm:
    rep: WeylElement
    value: complex


@dataclass(frozen=True)
class SsContribution:
    """Value of τ_γ plus the per-coset breakdown and the cross-check path."""

    kind: ElementKind
    value: complex
    terms: Tuple[CosetTerm, ...] = ()
    display_value: Optional[complex] = None
    sign_convention: SignConvention = SignConvention.MINUS_EXP
    paths_agree: bool = True
    notes: Tuple[str, ...] = ()


def _computation(computation: Optional[ComputationSettings]) -> ComputationSettings:
    return computation or settings.computation


def formal_degree(mu: WeightVec, sub: SymmetricPair) -> Fraction:
    """d^{sub}_μ = ∏_{α∈R+(sub)} (μ, α)/(ρ_sub, α); 1 for an empty root system."""
    value = Fraction(1)
    for alpha in sub.positive_vectors:
        value *= sub.form.pair(mu, alpha) / sub.form.pair(sub.rho, alpha)
    return value


def classify_element(
    pair: SymmetricPair, spec: ElementSpec, ambient: Optional[SymmetricPair] = None
) -> ElementDescriptor:
    """
    Turn a user element description into a descriptor.

    A central claim is verified against the roots of ``pair``; an elliptic
    element that happens to be central is accepted and evaluated by the
    elliptic formula, which then reduces to the central one.

    Args:
        pair: Group whose roots decide central against elliptic
        spec: The element as supplied by the user
        ambient: Group whose torus X must lie in; ``pair`` by default.
            A Levi factor passes the full group here, since its own roots
            do not span the torus.

    Returns:
        The descriptor, with the torus part parsed for central and
        elliptic elements

    Raises:
        InvalidInput: malformed or missing coordinates, or X outside the
            span of the coroots (e.g. not traceless for su(p,q)).
        MisclassifiedElement: a "central" element that is not central.
    """
    if spec.type == ElementKind.HYPERBOLIC:
        return ElementDescriptor(ElementKind.HYPERBOLIC)
    if spec.X is None:
        if spec.type == ElementKind.CENTRAL:
            return ElementDescriptor(ElementKind.CENTRAL, TorusElement((Fraction(0),) * pair.rank))
        raise InvalidInput("Elliptic elements need torus coordinates 'X'")
    torus = parse_torus([to_fraction(x) for x in spec.X], pair.rank)
    span_pair = ambient or pair
    if not in_coroot_span(span_pair, torus.X):
        raise InvalidInput(
            f"X is not in the Lie algebra of the torus of {span_pair.name}",
            X=WeightVec(torus.X),
        )
    central = torus.is_central(pair.positive_vectors)
    if spec.type == ElementKind.CENTRAL and not central:
        raise MisclassifiedElement(
            "Element claimed central does not centralize every root",
            X=WeightVec(torus.X),
        )
    if spec.type == ElementKind.ELLIPTIC and central:
        logger.debug("Elliptic element %s is central in %s", WeightVec(torus.X), pair.name)
    return ElementDescriptor(spec.type, torus)


def tau_central(inp: DiracInput, gamma: ElementDescriptor) -> complex:
    """τ_γ = e^{λ−ρ_n}(γ)·d^G_{λ+ρ_c} for γ in the center."""
    if gamma.kind != ElementKind.CENTRAL or gamma.torus is None:
        raise WrongElementKind("tau_central needs a central element", kind=gamma.kind)
    pair = inp.pair
    if not gamma.torus.is_central(pair.positive_vectors):
        raise WrongElementKind("Element does not centralize every root")
    degree = formal_degree(inp.lambda_plus_rho_c, pair)
    return eval_exp(inp.lam - pair.rho_n, gamma.torus) * float(degree)


def tau_hyperbolic(inp: DiracInput) -> complex:
    """Hyperbolic orbital integrals of the index vanish."""
    return complex(0)


def _outside_roots(pair: SymmetricPair, cent: SymmetricPair) -> List[WeightVec]:
    inside = set(cent.positive_vectors)
    return [a for a in pair.positive_vectors if a not in inside]


def _moved_positive_system(
    pair: SymmetricPair, cent: SymmetricPair, w: WeylElement
) -> Tuple[List[WeightVec], List[WeightVec]]:
    """
    Split wR+(G, T) into the roots lying in R(G_γ, T) and the rest.

    The first part is the positive system of G_γ induced by the complex
    structure on the component G_γ·w/T of the fixed-point set; the second
    indexes the antiholomorphic normal directions there.
    """
    inside = cent.root_vectors
    along: List[WeightVec] = []
    normal: List[WeightVec] = []
    for alpha in pair.positive_vectors:
        moved = w.act(alpha)
        (along if moved in inside else normal).append(moved)
    return along, normal


def _signed_degree(mu: WeightVec, positives: List[WeightVec], form: BilinearForm) -> Fraction:
    """∏_{β∈P} (μ, β)/(ρ_P, β) for a positive system P of the centralizer."""
    rho_p = half_sum(positives, mu.rank)
    value = Fraction(1)
    for beta in positives:
        value *= form.pair(mu, beta) / form.pair(rho_p, beta)
    return value


def coset_sum_terms(
    pair: SymmetricPair,
    lam: WeightVec,
    torus: TorusElement,
    computation: Optional[ComputationSettings] = None,
) -> List[CosetTerm]:
    """
    Per-coset summands of the elliptic orbital integral.

    For a coset representative w let P_w = R(G_γ) ∩ wR+ and
    N_w = wR+ ∖ R(G_γ). The summand is

        (−1)^{dim G/K / 2} e^{w(λ−ρ_n)}(γ) (−1)^{dim G_γ/K_γ / 2}
            d^{P_w}_{w(λ−ρ_n)+ρ_{P_w}} / ∏_{β∈N_w}(1 − e^{−β}(γ))

    where d^{P} is the formal-degree product taken over P. When w
    normalizes R+(G_γ) this is d^{G_γ}_{w(λ+ρ_γ−ρ_n)} over
    e^{w(ρ_γ−ρ)}(γ)·det(w)·e^{ρ−ρ_γ}(γ)·∏_{α∈R+∖R+_γ}(1 − e^{−α}(γ)).
    The summand equals the identity-coset summand at w⁻¹γw, so the total
    is a class function. No integrality checks are made on ``lam``, so
    the function also runs at Levi level.
    """
    comp = _computation(computation)
    if not pair.equal_rank:
        raise RankMismatch("Elliptic orbital integrals need an equal-rank pair", group=pair.name)
    cent = centralizer_subsystem(pair, torus.X)
    w_k = compact_weyl(pair, comp.weyl_group_bound)
    w_k_gamma = compact_weyl(cent, comp.weyl_group_bound)
    reps = coset_reps(w_k_gamma, w_k)
    sign = (-1) ** (pair.dim_GK // 2) * (-1) ** (cent.dim_GK // 2)

    terms = []
    for w in reps:
        along, normal = _moved_positive_system(pair, cent, w)
        shifted = w.act(lam - pair.rho_n)
        trace = eval_exp(shifted, torus)
        degree = _signed_degree(shifted + half_sum(along, pair.rank), along, pair.form)
        denominator = complex(1)
        for beta in normal:
            denominator *= 1 - eval_exp(-beta, torus)
        if abs(denominator) < comp.zero_tolerance:
            raise InternalError(
                "Vanishing Weyl denominator for an element outside the centralizer roots"
            )
        terms.append(CosetTerm(w, sign * trace * float(degree) / denominator))
    logger.debug(
        "Elliptic sum over %d cosets (|W_K|=%d, |W_Kγ|=%d) for %s",
        len(reps), w_k.order, w_k_gamma.order, pair.name,
    )
    return terms


def display_path_value(
    pair: SymmetricPair,
    lam: WeightVec,
    torus: TorusElement,
    sign_convention: SignConvention,
    computation: Optional[ComputationSettings] = None,
) -> complex:
    """
    The closed form with the Weyl-type denominator pulled out of the sum:

        (−1)^{(dim G/K + dim G_γ/K_γ)/2} Σ_w det(w) e^{w(λ+ρ_c)−ρ^w_γ}(γ) d^{G_γ}_{w(λ−ρ_n)+ρ^w_γ}
            / (e^{ρ−ρ_γ}(γ)·∏_{α∈R+∖R+_γ}(1 − e^{∓α}(γ)))

    with ρ^w_γ the half sum of R(G_γ) ∩ wR+. It equals wρ_γ whenever w
    normalizes R+(G_γ).
    """
    comp = _computation(computation)
    cent = centralizer_subsystem(pair, torus.X)
    w_k = compact_weyl(pair, comp.weyl_group_bound)
    reps = coset_reps(compact_weyl(cent, comp.weyl_group_bound), w_k)
    denominator = eval_exp(pair.rho - cent.rho, torus)
    for alpha in _outside_roots(pair, cent):
        exponent = -alpha if sign_convention == SignConvention.MINUS_EXP else alpha
        denominator *= 1 - eval_exp(exponent, torus)
    if abs(denominator) < comp.zero_tolerance:
        raise InternalError("Vanishing denominator in the closed form")
    numerator = complex(0)
    for w in reps:
        along, _ = _moved_positive_system(pair, cent, w)
        rho_w = half_sum(along, pair.rank)
        degree = formal_degree(w.act(lam - pair.rho_n) + rho_w, cent)
        numerator += w.det * eval_exp(w.act(lam + pair.rho_c) - rho_w, torus) * float(degree)
    sign = (-1) ** ((pair.dim_GK + cent.dim_GK) // 2)
    return sign * numerator / denominator


def tau_elliptic(
    inp: DiracInput,
    gamma: ElementDescriptor,
    computation: Optional[ComputationSettings] = None,
) -> SsContribution:
    """
    Elliptic orbital integral τ_γ(ind_G D_W).

    The coset sum is authoritative; the closed form under the configured
    sign convention is evaluated alongside and a disagreement is logged.
    """
    if gamma.kind == ElementKind.HYPERBOLIC or gamma.torus is None:
        raise WrongElementKind("tau_elliptic needs an element of the compact torus")
    comp = _computation(computation)
    pair = inp.pair
    terms = coset_sum_terms(pair, inp.lam, gamma.torus, comp)
    value = sum((t.value for t in terms), complex(0))
    display = display_path_value(pair, inp.lam, gamma.torus, comp.sign_convention, comp)
    agree = abs(display - value) <= comp.zero_tolerance * max(1.0, abs(value))
    if not agree:
        logger.warning(
            "Closed form under sign convention '%s' differs from the coset sum: %s vs %s",
            comp.sign_convention.value, display, value,
        )
    logger.debug("τ_γ for X=%s on %s: %s", WeightVec(gamma.torus.X), pair.name, value)
    return SsContribution(
        kind=gamma.kind,
        value=value,
        terms=tuple(terms),
        display_value=display,
        sign_convention=comp.sign_convention,
        paths_agree=agree,
    )


def resolve_sign_convention(
    inp: DiracInput,
    gamma: ElementDescriptor,
    computation: Optional[ComputationSettings] = None,
) -> SignConvention:
    """
    The sign convention under which the closed form reproduces the coset sum.

    MINUS_EXP is preferred when both agree (no roots outside the centralizer).

    Raises:
        InternalError: if neither convention agrees.
    """
    if gamma.torus is None:
        raise WrongElementKind("Sign resolution needs an element of the compact torus")
    comp = _computation(computation)
    terms = coset_sum_terms(inp.pair, inp.lam, gamma.torus, comp)
    value = sum((t.value for t in terms), complex(0))
    for convention in (SignConvention.MINUS_EXP, SignConvention.PLUS_EXP):
        display = display_path_value(inp.pair, inp.lam, gamma.torus, convention, comp)
        if abs(display - value) <= comp.zero_tolerance * max(1.0, abs(value)):
            return convention
    raise InternalError("No sign convention reproduces the coset sum")


def dense_powers_value(
    inp: DiracInput,
    gamma: ElementDescriptor,
    computation: Optional[ComputationSettings] = None,
) -> complex:
    """
    Character-ratio form for regular γ (centralizer equal to T):

        (−1)^{dim G/K / 2} A_{λ+ρ_c}^{W_K}(γ) / (e^ρ ∏_{α>0}(1 − e^{−α}))(γ)

    Raises:
        NotSupported: if some root is integral on X.
    """
    if gamma.torus is None:
        raise WrongElementKind("Dense-powers form needs an element of the compact torus")
    comp = _computation(computation)
    pair = inp.pair
    cent = centralizer_subsystem(pair, gamma.torus.X)
    if cent.roots:
        raise NotSupported("Dense-powers form needs a regular element")
    w_k = compact_weyl(pair, comp.weyl_group_bound)
    numerator = eval_character(weyl_numerator(inp.lambda_plus_rho_c, w_k), gamma.torus)
    denominator = weyl_denominator_value(
        gamma.torus, pair.positive_vectors, pair.rho, SignConvention.MINUS_EXP
    )
    return (-1) ** (pair.dim_GK // 2) * numerator / denominator


def evaluate_semisimple(
    inp: DiracInput,
    gamma: ElementDescriptor,
    computation: Optional[ComputationSettings] = None,
) -> SsContribution:
    """Dispatch on the element kind."""
    if gamma.kind == ElementKind.HYPERBOLIC:
        return SsContribution(ElementKind.HYPERBOLIC, tau_hyperbolic(inp))
    if gamma.kind == ElementKind.CENTRAL:
        comp = _computation(computation)
        return SsContribution(
            ElementKind.CENTRAL,
            tau_central(inp, gamma),
            sign_convention=comp.sign_convention,
        )
    return tau_elliptic(inp, gamma, computation)


def conjugate_element(
    gamma: ElementDescriptor, w: WeylElement, pair: SymmetricPair
) -> ElementDescriptor:
    """wγw⁻¹ for w in the Weyl group, acting on torus coordinates."""
    if gamma.torus is None:
        return gamma
    return ElementDescriptor(gamma.kind, TorusElement(w.act_dual(gamma.torus.X, pair.form)))


def element_order(gamma: ElementDescriptor, pair: SymmetricPair) -> Optional[int]:
    """Order of γ modulo the centre of ``pair``; None for hyperbolic elements."""
    return gamma.torus.order(pair.positive_vectors) if gamma.torus is not None else None
