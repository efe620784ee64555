"""
Non-semisimple contributions for groups of real rank one.

Four terms enter the trace formula besides the semisimple orbital
integrals: the unipotent N_{2λ} term (only nonzero for SU(2n,1)), the
τ_λ term (always zero), a residual term that only appears for singular
λ+ρ_c, and a remainder term given by a signed sum over W_M\\W_K.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Tuple

from index_pairing_hub.config.settings import ComputationSettings, settings
from index_pairing_hub.domain.charalg import weyl_dim
from index_pairing_hub.domain.conventions import (
    BernoulliConvention,
    NormReading,
    SubscriptVariant,
)
from index_pairing_hub.domain.errors import (
    AmbiguousSign,
    DegenerateZ0,
    InternalError,
    InvalidRootDatum,
    MissingGammaData,
    NonIntegralK,
    NotSupported,
)
from index_pairing_hub.domain.rootsys import (
    Root,
    SymmetricPair,
    generate_root_system,
    is_regular,
)
from index_pairing_hub.domain.schema import GammaData, RankOneSpec
from index_pairing_hub.domain.weights import WeightVec, to_fraction
from index_pairing_hub.domain.weyl import compact_weyl, coset_reps, dominant_representative, full_weyl
from index_pairing_hub.services.indexss import DiracInput

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankOneData:
    """Restricted-root data of a real rank one group and its compact M."""

    dim_n_lambda: int
    dim_n_2lambda: int
    lambda_res_norm: Fraction
    zvec: WeightVec
    m_pair: SymmetricPair
    su_n: Optional[int] = None
    z0: Optional[WeightVec] = None
    rplus0: Optional[Tuple[WeightVec, ...]] = None
    real_hyperbolic_dim: Optional[int] = None

    @classmethod
    def from_spec(cls, pair: SymmetricPair, spec: RankOneSpec) -> "RankOneData":
        """
        Raises:
            InvalidRootDatum: inconsistent dimensions, Zvec not orthogonal
                to the roots of M, or malformed vectors.
        """
        if pair.dim_GK != spec.dim_n_lambda + spec.dim_n_2lambda + 1:
            raise InvalidRootDatum(
                "dim G/K must equal dim 𝔫_λ + dim 𝔫_2λ + 1",
                group=pair.name,
                dim_GK=pair.dim_GK,
            )
        zvec = WeightVec.of(spec.zvec)
        if zvec.rank != pair.rank or zvec.is_zero():
            raise InvalidRootDatum("zvec must be a nonzero vector of rank length", group=pair.name)
        m_simple = [WeightVec.of(r) for r in spec.m_simple_roots]
        # M is compact: every root is flagged compact.
        m_roots = tuple(
            Root(r.vec, r.positive, True) for r in generate_root_system(m_simple, pair.form)
        )
        m_pair = SymmetricPair(f"{pair.name}:M", pair.rank, pair.form, m_roots, 0)
        for alpha in m_pair.positive_vectors:
            if alpha.dot(zvec) != 0:
                raise InvalidRootDatum("Roots of M must vanish on zvec", root=alpha)
        norm = to_fraction(spec.lambda_res_norm)
        if norm <= 0:
            raise InvalidRootDatum("lambda_res_norm must be positive", group=pair.name)
        return cls(
            dim_n_lambda=spec.dim_n_lambda,
            dim_n_2lambda=spec.dim_n_2lambda,
            lambda_res_norm=norm,
            zvec=zvec,
            m_pair=m_pair,
            su_n=spec.su_n,
            z0=WeightVec.of(spec.z0) if spec.z0 is not None else None,
            rplus0=tuple(WeightVec.of(r) for r in spec.rplus0) if spec.rplus0 else None,
            real_hyperbolic_dim=spec.real_hyperbolic_dim,
        )

    def restrict(self, mu: WeightVec, pair: SymmetricPair) -> WeightVec:
        """Orthogonal projection of μ onto the annihilator of zvec, i.e. i(𝔱∩𝔪)*."""
        z_star = pair.form.raise_(self.zvec)
        scale = mu.dot(self.zvec) / z_star.dot(self.zvec)
        return mu - z_star.scale(scale)


@lru_cache(maxsize=None)
def _modern_bernoulli(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for k in range(n):
        total += math.comb(n + 1, k) * _modern_bernoulli(k)
    return -total / (n + 1)


def bernoulli(n: int, conv: BernoulliConvention = BernoulliConvention.CLASSICAL) -> Fraction:
    """
    Exact Bernoulli numbers.

    MODERN follows Σ_{k≤n} C(n+1,k) b_k = 0 (so b_1 = −1/2); CLASSICAL
    returns B_n = |b_{2n}| for n ≥ 1 and B_0 = 1.

    Args:
        n: Index, non-negative
        conv: Numbering to use

    Returns:
        The Bernoulli number as an exact fraction

    Raises:
        ValueError: for negative n.
    """
    if n < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if conv == BernoulliConvention.MODERN:
        return _modern_bernoulli(n)
    if n == 0:
        return Fraction(1)
    return abs(_modern_bernoulli(2 * n))


def sphere_area(d: int) -> float:
    """
    Area of the unit sphere S^{d−1} ⊂ ℝ^d: 2π^{d/2}/Γ(d/2).

    Raises:
        ValueError: for d < 1.
    """
    if d < 1:
        raise ValueError("sphere_area needs d ≥ 1")
    return 2 * math.pi ** (d / 2) / math.gamma(d / 2)


def c2_gamma(gd: GammaData, n: int, conv: BernoulliConvention) -> float:
    """
    C_2(Γ) = Σ_j r_j · (2π)^{2n}/(2n)! · B_n.

    Args:
        gd: Γ-data; only ``cusp_volume_ratios`` is read
        n: The n of SU(2n,1)
        conv: Bernoulli numbering

    Returns:
        C_2(Γ); 0 for an explicitly empty list of cusps

    Raises:
        MissingGammaData: if ``cusp_volume_ratios`` was not supplied.
    """
    if gd.cusp_volume_ratios is None:
        raise MissingGammaData("cusp_volume_ratios are required for the N_2λ term")
    if not gd.cusp_volume_ratios:
        return 0.0
    factor = (2 * math.pi) ** (2 * n) / math.factorial(2 * n) * float(bernoulli(n, conv))
    return sum(gd.cusp_volume_ratios) * factor


def _sign(value: Fraction) -> int:
    return 1 if value > 0 else -1


def epsilon_Rplus(data: RankOneData, pair: SymmetricPair) -> int:
    """
    Sign of ∏⟨α, Z_0⟩ over the noncompact positive roots.

    Raises:
        NotSupported: the rank one data has no Z_0.
        DegenerateZ0: Z_0 is orthogonal to a noncompact root.
    """
    if data.z0 is None:
        raise NotSupported("Rank-one data carries no Z0", group=pair.name)
    product = Fraction(1)
    for alpha in pair.noncompact_positive:
        value = alpha.dot(data.z0)
        if value == 0:
            raise DegenerateZ0("Z0 is orthogonal to a noncompact root", root=alpha)
        product *= value
    return _sign(product)


def lambda_norm(inp: DiracInput, data: RankOneData, reading: NormReading) -> float:
    """‖λ‖ as the restricted root norm or as the norm of the highest weight."""
    if reading == NormReading.HIGHEST_WEIGHT:
        return math.sqrt(inp.pair.form.norm_sq(inp.lam))
    return float(data.lambda_res_norm)


def tau_n0_contribution(
    inp: DiracInput,
    data: RankOneData,
    gd: GammaData,
    computation: Optional[ComputationSettings] = None,
) -> float:
    """
    Unipotent N_2λ term, already weighted by C_2(Γ):

        ‖λ‖ · 2^{3n−3}(2n+1)^n / area(S^{4n−1}) · C_2(Γ) · ε(R+(G,T)) · dim W

    and 0 unless G = SU(2n,1).

    Raises:
        MissingGammaData: if ``cusp_volume_ratios`` was not supplied.
        NotSupported: SU(2n,1) data without Z_0.
    """
    comp = computation or settings.computation
    if data.su_n is None:
        return 0.0
    n = data.su_n
    pair = inp.pair
    dim_w = weyl_dim(inp.lam, pair.compact_positive, pair.rho_c, pair.form)
    constant = 2 ** (3 * n - 3) * (2 * n + 1) ** n / sphere_area(4 * n)
    value = (
        lambda_norm(inp, data, comp.norm_reading)
        * constant
        * c2_gamma(gd, n, comp.bernoulli)
        * epsilon_Rplus(data, pair)
        * dim_w
    )
    logger.debug("N_2λ term for %s: %s", pair.name, value)
    return value


def tau_lambda_contribution() -> float:
    """The weighted orbital integral of the index along 𝔫_λ; identically 0."""
    return 0.0


def tau_lambda_coefficient(inp: DiracInput, data: RankOneData, gd: GammaData,
                           computation: Optional[ComputationSettings] = None) -> float:
    """C_λ(Γ)/(A(𝔫_λ)·|λ|) with A(𝔫_λ) the area of the unit sphere in 𝔫_λ."""
    comp = computation or settings.computation
    if gd.C_lambda == 0 or data.dim_n_lambda == 0:
        return 0.0
    norm = lambda_norm(inp, data, comp.norm_reading)
    if norm == 0:
        return 0.0
    return gd.C_lambda / (sphere_area(data.dim_n_lambda) * norm)


def tau_res_contribution(inp: DiracInput, gd: GammaData) -> float:
    """
    0 for regular λ+ρ_c, otherwise 2·Σ of the supplied residual traces.

    Args:
        inp: Group and K-type
        gd: Γ-data; only ``residual_traces`` is read

    Returns:
        The residual term before its −¼ weight

    Raises:
        MissingGammaData: singular λ+ρ_c and no ``residual_traces``.
    """
    if is_regular(inp.lambda_plus_rho_c, inp.pair):
        return 0.0
    if gd.residual_traces is None:
        raise MissingGammaData("Singular λ+ρ_c needs residual_traces")
    return 2 * sum(gd.residual_traces)


def k_of_mu(mu: WeightVec, data: RankOneData) -> int:
    """
    ⟨μ, Zvec⟩, the A-weight of μ.

    Raises:
        NonIntegralK: if the pairing is not an integer.
    """
    value = mu.dot(data.zvec)
    if value.denominator != 1:
        raise NonIntegralK("k(μ) is not an integer", weight=mu, value=value)
    return int(value)


def epsilon_lambda(mu: WeightVec, data: RankOneData, pair: SymmetricPair) -> int:
    """
    Sign of ∏_{α∈R+_0}(μ, α); R+_0 defaults to R+(G, T).

    Raises:
        NotSupported: μ is singular for R+_0.
    """
    system = data.rplus0 if data.rplus0 is not None else pair.positive_vectors
    product = Fraction(1)
    for alpha in system:
        product *= pair.form.pair(mu, alpha)
    if product == 0:
        raise NotSupported("λ+ρ_c is singular for the chosen positive system")
    return _sign(product)


def tau_rem_contribution(
    inp: DiracInput,
    data: RankOneData,
    gd: GammaData,
    computation: Optional[ComputationSettings] = None,
) -> float:
    """
    Remainder term

        (−1)^{dim G/K / 2}/2 · l · ε(λ+ρ_c)
            · Σ_{w∈W_M\\W_K} det(w) sgn k(w(λ+ρ_c)) dim σ_{w_M w(λ+ρ_c)|−ρ^M}

    zero on real hyperbolic spaces of dimension ≥ 4.

    Args:
        inp: Group and K-type
        data: Rank one data; ``real_hyperbolic_dim`` enables the short-circuit
        gd: Γ-data, of which only the cusp count l is read
        computation: Settings supplying the σ subscript variant

    Returns:
        The remainder term as a float

    Raises:
        NotSupported: singular λ+ρ_c.
        InvalidRootDatum: W_M is not a subgroup of W_K.
        AmbiguousSign: k(w(λ+ρ_c)) = 0 for some coset.
    """
    if data.real_hyperbolic_dim is not None and data.real_hyperbolic_dim >= 4:
        return 0.0
    comp = computation or settings.computation
    pair = inp.pair
    mu = inp.lambda_plus_rho_c
    if not is_regular(mu, pair):
        raise NotSupported("The remainder term is only available for regular λ+ρ_c")
    m = data.m_pair
    w_k = compact_weyl(pair, comp.weyl_group_bound)
    w_m = full_weyl(m, comp.weyl_group_bound)
    # The so(n,1) entries list roots of M that are noncompact in G, so
    # their W_M is not inside W_K; they only get here without the
    # real hyperbolic short-circuit.
    if not all(w_k.contains(w) for w in w_m.elements):
        raise InvalidRootDatum(
            "Weyl group of M is not contained in W_K; the remainder sum is undefined",
            group=pair.name,
        )
    reps = coset_reps(w_m, w_k)
    eps = epsilon_lambda(mu, data, pair)
    source = mu if comp.subscript_variant == SubscriptVariant.DISPLAY else inp.lam - pair.rho_c

    total = 0
    for w in reps:
        k = k_of_mu(w.act(mu), data)
        if k == 0:
            raise AmbiguousSign("k(w(λ+ρ_c)) vanishes", rep=w.to_strings())
        dominant = dominant_representative(
            data.restrict(w.act(mu), pair), w_m, m.positive_vectors, m.form
        )
        if not dominant.strict:
            raise InternalError("Restricted weight is not regular for M", weight=dominant.weight)
        weight = data.restrict(w.act(source), pair)
        highest = dominant.element.act(weight) - m.rho
        dim_sigma = weyl_dim(highest, m.positive_vectors, m.rho, m.form)
        total += w.det * (1 if k > 0 else -1) * dim_sigma
    value = (-1) ** (pair.dim_GK // 2) / 2 * gd.l * eps * total
    logger.debug("Remainder term for %s over %d cosets: %s", pair.name, len(reps), value)
    return value
