"""
Exact rational weight vectors and the invariant bilinear form.

Weights live in a fixed ambient basis of i𝔱* with rational coordinates.
The coordinate dot product pairs a weight with a torus element X (so
that e^μ(exp 2πiX) = exp(2πi⟨μ,X⟩)); the Gram matrix of a
``BilinearForm`` gives the invariant pairing (μ, α) between weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple, Union

import sympy

from index_pairing_hub.domain.errors import InvalidInput, InvalidRootDatum

RationalLike = Union[int, str, Fraction]


def to_fraction(value: RationalLike) -> Fraction:
    """
    Parse an exact rational.

    Accepts ints, Fractions and strings such as ``"3"``, ``"-1/2"``.
    Floats are rejected: every quantity entering the math core is exact.
    """
    if isinstance(value, bool):
        raise InvalidInput(f"Expected a rational, got boolean {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInput(f"Malformed rational {value!r}: {e}") from e
    raise InvalidInput(f"Expected a rational string, got {type(value).__name__}")


def format_fraction(value: Fraction) -> str:
    """Render as ``"p/q"`` (or ``"p"`` when integral)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> List[Fraction]:
    """Parse a comma separated list like ``"1/2,0,-3/2"``."""
    parts = [p for p in text.replace(" ", "").split(",") if p != ""]
    if not parts:
        raise InvalidInput("Empty rational vector")
    return [to_fraction(p) for p in parts]


@dataclass(frozen=True)
class WeightVec:
    """An exact vector of rationals in the fixed ambient basis."""

    coords: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> "WeightVec":
        return cls(tuple(to_fraction(v) for v in values))

    @classmethod
    def zero(cls, rank: int) -> "WeightVec":
        return cls((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "WeightVec":
        return WeightVec(tuple(-a for a in self.coords))

    def scale(self, factor: RationalLike) -> "WeightVec":
        c = to_fraction(factor)
        return WeightVec(tuple(c * a for a in self.coords))

    def dot(self, other: Union["WeightVec", Sequence[Fraction]]) -> Fraction:
        """Coordinate pairing ⟨μ, X⟩ with a torus point or functional."""
        values = other.coords if isinstance(other, WeightVec) else other
        return sum((a * b for a, b in zip(self.coords, values)), Fraction(0))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def to_strings(self) -> List[str]:
        return [format_fraction(a) for a in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(self.to_strings()) + ")"


def _to_sympy(rows: Sequence[Sequence[Fraction]]) -> sympy.Matrix:
    return sympy.Matrix(
        [[sympy.Rational(x.numerator, x.denominator) for x in row] for row in rows]
    )


def _from_sympy(matrix: sympy.Matrix) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in matrix.row(i))
        for i in range(matrix.rows)
    )


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank of a rational matrix."""
    if not rows:
        return 0
    return int(_to_sympy(rows).rank())


@dataclass(frozen=True)
class BilinearForm:
    """Symmetric positive definite rational Gram matrix."""

    gram: Tuple[Tuple[Fraction, ...], ...]
    _inverse: Tuple[Tuple[Fraction, ...], ...] = field(
        default=(), init=False, repr=False, compare=False
    )
    _is_identity: bool = field(default=False, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        n = len(self.gram)
        if any(len(row) != n for row in self.gram):
            raise InvalidRootDatum("Gram matrix must be square", size=n)
        for i in range(n):
            for j in range(i + 1, n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise InvalidRootDatum("Gram matrix must be symmetric", entry=(i, j))
        matrix = _to_sympy(self.gram)
        for k in range(1, n + 1):
            if matrix[:k, :k].det() <= 0:
                raise InvalidRootDatum(
                    "Gram matrix must be positive definite", leading_minor=k
                )
        object.__setattr__(self, "_inverse", _from_sympy(matrix.inv()) if n else ())
        identity = all(
            self.gram[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n)
        )
        object.__setattr__(self, "_is_identity", identity)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[RationalLike]]) -> "BilinearForm":
        return cls(tuple(tuple(to_fraction(x) for x in row) for row in rows))

    @classmethod
    def identity(cls, rank: int) -> "BilinearForm":
        return cls(
            tuple(
                tuple(Fraction(1 if i == j else 0) for j in range(rank))
                for i in range(rank)
            )
        )

    @property
    def rank(self) -> int:
        return len(self.gram)

    def lower(self, v: WeightVec) -> WeightVec:
        """G·v: the functional (v, ·) written in coordinates."""
        if self._is_identity:
            return v
        return WeightVec(tuple(WeightVec(row).dot(v) for row in self.gram))

    def raise_(self, z: Sequence[Fraction] | WeightVec) -> WeightVec:
        """G⁻¹·z: the weight whose form pairing equals the coordinate pairing with z."""
        vec = z if isinstance(z, WeightVec) else WeightVec(tuple(z))
        if self._is_identity:
            return vec
        return WeightVec(tuple(WeightVec(row).dot(vec) for row in self._inverse))

    def pair(self, u: WeightVec, v: WeightVec) -> Fraction:
        """Invariant pairing (u, v)."""
        if self._is_identity:
            return u.dot(v)
        return u.dot(self.lower(v))

    def norm_sq(self, u: WeightVec) -> Fraction:
        return self.pair(u, u)

    def reflect(self, v: WeightVec, alpha: WeightVec) -> WeightVec:
        """s_α(v) = v − 2(v,α)/(α,α)·α."""
        c = 2 * self.pair(v, alpha) / self.pair(alpha, alpha)
        if c == 0:
            return v
        return v - alpha.scale(c)

    def to_strings(self) -> List[List[str]]:
        return [[format_fraction(x) for x in row] for row in self.gram]
