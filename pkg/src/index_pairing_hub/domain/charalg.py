"""
Character algebra on the compact torus.

Characters are finite Laurent polynomials Σ c_μ e^μ with integer
coefficients. Irreducible characters come from exact division of Weyl
alternants, multiplicities from Freudenthal's recursion, and restrictions
decompose by stripping highest weights.
"""

import cmath
import logging
import math
from collections import defaultdict, deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from index_pairing_hub.domain.conventions import ElementKind, SignConvention
from index_pairing_hub.domain.errors import (
    InternalError,
    InvalidInput,
    NotDominant,
    NotInvariant,
)
from index_pairing_hub.domain.rootsys import half_sum, indecomposable, is_dominant
from index_pairing_hub.domain.weights import BilinearForm, WeightVec
from index_pairing_hub.domain.weyl import WeylGroup

logger = logging.getLogger(__name__)

DEFAULT_DECOMPOSE_BOUND = 10_000

_QUARTER_TURNS = {
    Fraction(0): complex(1, 0),
    Fraction(1, 4): complex(0, 1),
    Fraction(1, 2): complex(-1, 0),
    Fraction(3, 4): complex(0, -1),
}


@dataclass(frozen=True)
class TorusElement:
    """γ = exp(2πiX) with X given in the ambient coordinate basis."""

    X: Tuple[Fraction, ...]

    @classmethod
    def of(cls, coords: Iterable[Fraction]) -> "TorusElement":
        return cls(tuple(coords))

    def order(self, roots: Iterable[WeightVec]) -> int:
        """
        Least N > 0 with N·⟨α, X⟩ ∈ ℤ for every root α.

        This is the order of γ modulo the centre, so a central element has
        order 1 whatever its coordinates are.

        Args:
            roots: Roots of the group γ lives in

        Returns:
            The order as a positive integer
        """
        order = 1
        for a in roots:
            d = a.dot(self.X).denominator
            order = order * d // math.gcd(order, d)
        return order

    def is_central(self, roots: Iterable[WeightVec]) -> bool:
        return all(a.dot(self.X).denominator == 1 for a in roots)


@dataclass(frozen=True)
class ElementDescriptor:
    kind: ElementKind
    torus: Optional[TorusElement] = None


def eval_exp(mu: WeightVec, gamma: TorusElement) -> complex:
    """
    e^μ(γ) = exp(2πi⟨μ, X⟩), reducing the phase mod 1 exactly first.

    Quarter-turn phases come back as exact complex units.

    Args:
        mu: Weight, paired with X by the coordinate dot product
        gamma: Torus element

    Returns:
        The value as a complex number
    """
    phase = mu.dot(gamma.X)
    phase -= phase.numerator // phase.denominator
    exact = _QUARTER_TURNS.get(phase)
    if exact is not None:
        return exact
    return cmath.exp(2j * cmath.pi * float(phase))


def order_key(rho: WeightVec, form: BilinearForm) -> Callable[[WeightVec], Tuple]:
    """Total group order on weights: (μ, ρ) first, coordinates lexicographically second."""

    def key(mu: WeightVec) -> Tuple:
        return (form.pair(mu, rho), mu.coords)

    return key


@dataclass(frozen=True)
class LaurentChar:
    """Finite Σ c_μ e^μ; ``terms`` is sorted by coordinates and never holds zeros."""

    rank: int
    terms: Tuple[Tuple[WeightVec, int], ...] = ()

    @classmethod
    def from_mapping(cls, rank: int, mapping: Mapping[WeightVec, int]) -> "LaurentChar":
        items = sorted(
            ((mu, c) for mu, c in mapping.items() if c != 0), key=lambda t: t[0].coords
        )
        return cls(rank, tuple(items))

    @classmethod
    def monomial(cls, mu: WeightVec, coeff: int = 1) -> "LaurentChar":
        return cls.from_mapping(mu.rank, {mu: coeff})

    @classmethod
    def one(cls, rank: int) -> "LaurentChar":
        return cls.monomial(WeightVec.zero(rank))

    @cached_property
    def coefficients(self) -> Dict[WeightVec, int]:
        return dict(self.terms)

    def coefficient(self, mu: WeightVec) -> int:
        return self.coefficients.get(mu, 0)

    @property
    def support(self) -> List[WeightVec]:
        return [mu for mu, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def dimension(self) -> int:
        """Value at the identity."""
        return sum(c for _, c in self.terms)

    def __add__(self, other: "LaurentChar") -> "LaurentChar":
        acc: Dict[WeightVec, int] = defaultdict(int, self.coefficients)
        for mu, c in other.terms:
            acc[mu] += c
        return LaurentChar.from_mapping(self.rank, acc)

    def __neg__(self) -> "LaurentChar":
        return LaurentChar(self.rank, tuple((mu, -c) for mu, c in self.terms))

    def __sub__(self, other: "LaurentChar") -> "LaurentChar":
        return self + (-other)

    def __mul__(self, other: Union["LaurentChar", int]) -> "LaurentChar":
        if isinstance(other, int):
            return LaurentChar.from_mapping(
                self.rank, {mu: c * other for mu, c in self.terms}
            )
        acc: Dict[WeightVec, int] = defaultdict(int)
        for mu, c in self.terms:
            for nu, d in other.terms:
                acc[mu + nu] += c * d
        return LaurentChar.from_mapping(self.rank, acc)

    __rmul__ = __mul__

    def is_invariant(self, W: WeylGroup) -> bool:
        coeffs = self.coefficients
        for w in W.elements:
            for mu, c in self.terms:
                if coeffs.get(w.act(mu), 0) != c:
                    return False
        return True

    def to_json(self) -> List[Dict[str, object]]:
        return [{"weight": mu.to_strings(), "coeff": c} for mu, c in self.terms]


def eval_character(chi: LaurentChar, gamma: TorusElement) -> complex:
    """
    Σ c_μ e^μ(γ).

    Args:
        chi: Character to evaluate
        gamma: Torus element

    Returns:
        The complex value; 0 for the zero character
    """
    return sum((c * eval_exp(mu, gamma) for mu, c in chi.terms), complex(0))


def weyl_numerator(mu: WeightVec, W: WeylGroup) -> LaurentChar:
    """
    Alternant A_μ = Σ_w det(w) e^{wμ}.

    Args:
        mu: Weight to alternate
        W: Weyl group to sum over

    Returns:
        The alternant; zero when μ lies on a wall of W
    """
    acc: Dict[WeightVec, int] = defaultdict(int)
    for w in W.elements:
        acc[w.act(mu)] += w.det
    return LaurentChar.from_mapping(mu.rank, acc)


def weyl_denominator_value(
    gamma: TorusElement,
    positives: Sequence[WeightVec],
    rho: WeightVec,
    sign_convention: SignConvention = SignConvention.MINUS_EXP,
) -> complex:
    """e^ρ(γ)·∏(1 − e^{∓α}(γ)); the sign follows ``sign_convention``."""
    value = eval_exp(rho, gamma)
    for alpha in positives:
        exponent = -alpha if sign_convention == SignConvention.MINUS_EXP else alpha
        value *= 1 - eval_exp(exponent, gamma)
    return value


def weyl_dim(
    mu_hw: WeightVec, positives: Sequence[WeightVec], rho: WeightVec, form: BilinearForm
) -> int:
    """
    Weyl dimension formula ∏_{α>0} (μ+ρ, α)/(ρ, α).

    Args:
        mu_hw: Highest weight
        positives: Positive roots of the group
        rho: Half sum of ``positives``
        form: Invariant form

    Returns:
        Dimension of the irreducible with highest weight μ

    Raises:
        NotDominant: if μ is not dominant for ``positives``.
        InternalError: if the product is not an integer.
    """
    if not is_dominant(mu_hw, positives, form):
        raise NotDominant("Highest weight is not dominant", weight=mu_hw)
    shifted = mu_hw + rho
    value = Fraction(1)
    for alpha in positives:
        value *= form.pair(shifted, alpha) / form.pair(rho, alpha)
    if value.denominator != 1:
        raise InternalError("Weyl dimension is not an integer", weight=mu_hw, value=value)
    return int(value)


def laurent_divide(
    dividend: LaurentChar, divisor: LaurentChar, key: Callable[[WeightVec], Tuple]
) -> LaurentChar:
    """
    Exact quotient in the group ring, by long division in the order ``key``.

    Raises:
        InternalError: if the division leaves a remainder.
    """
    if divisor.is_zero():
        raise InternalError("Division by the zero character")
    if dividend.is_zero():
        return LaurentChar(dividend.rank)
    lead = max(divisor.support, key=key)
    lead_coeff = divisor.coefficient(lead)
    floor = key(min(dividend.support, key=key) - min(divisor.support, key=key))

    remainder: Dict[WeightVec, int] = dict(dividend.coefficients)
    quotient: Dict[WeightVec, int] = defaultdict(int)
    while remainder:
        top = max(remainder, key=key)
        q_weight = top - lead
        if key(q_weight) < floor:
            raise InternalError("Laurent division leaves a remainder")
        q_coeff, rest = divmod(remainder[top], lead_coeff)
        if rest:
            raise InternalError("Laurent division is not integral")
        quotient[q_weight] += q_coeff
        for mu, c in divisor.terms:
            target = q_weight + mu
            updated = remainder.get(target, 0) - q_coeff * c
            if updated:
                remainder[target] = updated
            else:
                remainder.pop(target, None)
    return LaurentChar.from_mapping(dividend.rank, quotient)


def irr_character(
    mu_hw: WeightVec,
    positives: Sequence[WeightVec],
    W: WeylGroup,
    rho: WeightVec,
    form: BilinearForm,
) -> LaurentChar:
    """
    Character of the irreducible with highest weight μ: A_{μ+ρ} / A_ρ.

    Raises:
        NotDominant: if μ is not dominant for ``positives``.
        InternalError: if the alternants do not divide exactly.
    """
    if not is_dominant(mu_hw, positives, form):
        raise NotDominant("Highest weight is not dominant", weight=mu_hw)
    numerator = weyl_numerator(mu_hw + rho, W)
    denominator = weyl_numerator(rho, W)
    return laurent_divide(numerator, denominator, order_key(rho, form))


def freudenthal_multiplicities(
    mu_hw: WeightVec, positives: Sequence[WeightVec], form: BilinearForm
) -> Dict[WeightVec, int]:
    """
    Weight multiplicities of the irreducible with highest weight μ, by
    Freudenthal's recursion over weights reached from μ by subtracting
    simple roots.
    """
    if not is_dominant(mu_hw, positives, form):
        raise NotDominant("Highest weight is not dominant", weight=mu_hw)
    rank = mu_hw.rank
    rho = half_sum(positives, rank)
    simple = indecomposable(positives)
    top = form.norm_sq(mu_hw + rho)

    # Candidate weights; the BFS level of ν equals the height of μ − ν.
    levels: Dict[WeightVec, int] = {mu_hw: 0}
    queue = deque([mu_hw])
    while queue:
        nu = queue.popleft()
        for alpha in simple:
            lower = nu - alpha
            if lower in levels:
                continue
            if form.norm_sq(lower + rho) > top:
                continue
            levels[lower] = levels[nu] + 1
            queue.append(lower)

    mult: Dict[WeightVec, int] = {mu_hw: 1}
    for nu in sorted(levels, key=lambda v: levels[v]):
        if nu == mu_hw:
            continue
        numerator = Fraction(0)
        for alpha in positives:
            for k in range(1, levels[nu] + 1):
                above = nu + alpha.scale(k)
                if above in mult:
                    numerator += mult[above] * form.pair(above, alpha)
        numerator *= 2
        denominator = top - form.norm_sq(nu + rho)
        if denominator == 0:
            if numerator != 0:
                raise InternalError("Freudenthal recursion hit a zero denominator", weight=nu)
            continue
        value = numerator / denominator
        if value.denominator != 1:
            raise InternalError("Non-integral multiplicity", weight=nu, value=value)
        if value:
            mult[nu] = int(value)
    return mult


def decompose(
    chi: LaurentChar,
    positives: Sequence[WeightVec],
    W: WeylGroup,
    rho: WeightVec,
    form: BilinearForm,
    bound: int = DEFAULT_DECOMPOSE_BOUND,
) -> List[Tuple[WeightVec, int]]:
    """
    Write a W-invariant character as Σ m_U χ_{λ_U}.

    Args:
        chi: W-invariant character
        positives: Positive roots fixing dominance
        W: Weyl group of ``positives``
        rho: Half sum of ``positives``
        form: Invariant form
        bound: Largest number of highest weights to strip

    Returns:
        (λ_U, m_U) pairs in the order the highest weights were stripped
        (highest first); multiplicities may be negative

    Raises:
        NotInvariant: if ``chi`` is not W-invariant.
        InternalError: if stripping does not terminate within ``bound`` steps.
    """
    if not chi.is_invariant(W):
        raise NotInvariant("Character is not Weyl-invariant")
    key = order_key(rho, form)
    remaining = chi
    result: List[Tuple[WeightVec, int]] = []
    steps = 0
    while not remaining.is_zero():
        steps += 1
        if steps > bound:
            raise InternalError("Decomposition did not terminate", bound=bound)
        top = max(remaining.support, key=key)
        if not is_dominant(top, positives, form):
            raise InternalError("Maximal weight of an invariant character is not dominant", weight=top)
        mult = remaining.coefficient(top)
        result.append((top, mult))
        remaining = remaining - irr_character(top, positives, W, rho, form) * mult
    logger.debug("Decomposed character into %d irreducibles", len(result))
    return result


def spin_graded_character(roots: Sequence[WeightVec], rank: int) -> LaurentChar:
    """∏_{β} (e^{β/2} − e^{−β/2})."""
    result = LaurentChar.one(rank)
    for beta in roots:
        half = beta.scale(Fraction(1, 2))
        result = result * LaurentChar.from_mapping(rank, {half: 1, -half: -1})
    return result


def parse_torus(coords: Sequence[Fraction], rank: int) -> TorusElement:
    """
    Raises:
        InvalidInput: if the number of coordinates is not ``rank``.
    """
    if len(coords) != rank:
        raise InvalidInput(f"Torus element needs {rank} coordinates, got {len(coords)}")
    return TorusElement(tuple(coords))
