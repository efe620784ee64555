"""
Convention flags and vocabularies used across the index calculator.

The source formulas admit several readings (sign of the Weyl denominator,
Bernoulli indexing, which weight the remainder term restricts). Each
reading is a named enum value so that it can be selected from the
environment, the CLI or an API request.
"""

from enum import Enum


class ElementKind(str, Enum):
    """
    Kind of a semisimple element γ ∈ G:
    - CENTRAL: γ lies in the center Z_G
    - ELLIPTIC: γ is conjugate into the compact torus T
    - HYPERBOLIC: γ is not conjugate into any compact subgroup
    """

    CENTRAL = "central"
    ELLIPTIC = "elliptic"
    HYPERBOLIC = "hyperbolic"


class SignConvention(str, Enum):
    """
    Weyl denominator reading ∏(1 − e^{∓α}).

    MINUS_EXP uses e^{−α} and is the reading under which the closed form
    agrees with the coset-sum evaluation.
    """

    MINUS_EXP = "minus"
    PLUS_EXP = "plus"


class BernoulliConvention(str, Enum):
    """
    CLASSICAL: B_1 = 1/6, B_2 = 1/30, ... (B_n = |b_{2n}|, n ≥ 1)
    MODERN: b_0 = 1, b_1 = −1/2, b_2 = 1/6, ...
    """

    CLASSICAL = "classical"
    MODERN = "modern"


class SubscriptVariant(str, Enum):
    """Which weight the remainder term restricts to 𝔱∩𝔪 before taking M-dominant parts."""

    DISPLAY = "display"
    PROSE = "prose"


class NormReading(str, Enum):
    """How |λ| is read in the non-semisimple terms."""

    RESTRICTED_ROOT = "restricted_root"
    HIGHEST_WEIGHT = "highest_weight"


class QueryMode(str, Enum):
    ORBITAL = "orbital"
    HIGHER = "higher"
    NONSS = "nonss"
    ASSEMBLE = "assemble"
