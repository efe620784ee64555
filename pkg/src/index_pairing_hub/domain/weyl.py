"""
Finite Weyl groups as exact rational matrices.

Elements are enumerated breadth-first from the simple reflections of a
root subsystem, so the BFS depth is the Coxeter length. Matrices act on
weights in the ambient coordinate basis; torus points transform by the
dual (inverse-transpose) action.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from index_pairing_hub.domain.errors import GroupTooLarge, NotASubgroup
from index_pairing_hub.domain.rootsys import SymmetricPair, indecomposable
from index_pairing_hub.domain.weights import BilinearForm, WeightVec, format_fraction

logger = logging.getLogger(__name__)

DEFAULT_WEYL_BOUND = 100_000

Matrix = Tuple[Tuple[Fraction, ...], ...]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n))
        for i in range(n)
    )


def _identity(rank: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(rank)) for i in range(rank)
    )


def reflection_matrix(alpha: WeightVec, form: BilinearForm) -> Matrix:
    """Matrix of s_α: I − 2/(α,α)·α(Gα)ᵀ."""
    rank = alpha.rank
    g_alpha = form.lower(alpha).coords
    c = Fraction(2) / form.norm_sq(alpha)
    return tuple(
        tuple(
            Fraction(1 if i == j else 0) - c * alpha.coords[i] * g_alpha[j]
            for j in range(rank)
        )
        for i in range(rank)
    )


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    length: int
    det: int

    @property
    def key(self) -> Tuple[Fraction, ...]:
        return tuple(x for row in self.matrix for x in row)

    def act(self, mu: WeightVec) -> WeightVec:
        return WeightVec(tuple(WeightVec(row).dot(mu) for row in self.matrix))

    def act_dual(self, X: Sequence[Fraction], form: BilinearForm) -> Tuple[Fraction, ...]:
        """Torus action X ↦ G·M·G⁻¹·X, so that ⟨wμ, wX⟩ = ⟨μ, X⟩."""
        return form.lower(self.act(form.raise_(X))).coords

    def to_strings(self) -> List[List[str]]:
        return [[format_fraction(x) for x in row] for row in self.matrix]


@dataclass(frozen=True)
class WeylGroup:
    """
    A finite reflection group in BFS order.

    ``elements[0]`` is the identity and lengths are non-decreasing.
    """

    rank: int
    elements: Tuple[WeylElement, ...]
    simple_roots: Tuple[WeightVec, ...]
    _index: Dict[Tuple[Fraction, ...], WeylElement] = field(
        default_factory=dict, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        self._index.update({w.key: w for w in self.elements})

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def lookup(self, matrix: Matrix) -> Optional[WeylElement]:
        return self._index.get(tuple(x for row in matrix for x in row))

    def contains(self, w: WeylElement) -> bool:
        return w.key in self._index

    def longest(self) -> WeylElement:
        return self.elements[-1]

    @cached_property
    def sorted_elements(self) -> Tuple[WeylElement, ...]:
        """Elements ordered by (length, matrix entries)."""
        return tuple(sorted(self.elements, key=lambda w: (w.length, w.key)))


def enumerate_weyl(
    positives: Sequence[WeightVec],
    form: BilinearForm,
    rank: Optional[int] = None,
    bound: int = DEFAULT_WEYL_BOUND,
) -> WeylGroup:
    """
    Enumerate the Weyl group of the subsystem with the given positive roots.

    Raises:
        GroupTooLarge: if more than ``bound`` elements are produced.
    """
    return _enumerate_cached(tuple(positives), form, rank or form.rank, bound)


@lru_cache(maxsize=256)
def _enumerate_cached(
    positives: Tuple[WeightVec, ...], form: BilinearForm, rank: int, bound: int
) -> WeylGroup:
    simple = indecomposable(positives)
    generators = [reflection_matrix(a, form) for a in simple]
    identity = WeylElement(_identity(rank), 0, 1)
    seen: Dict[Matrix, WeylElement] = {identity.matrix: identity}
    ordered = [identity]
    frontier = [identity]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for w in frontier:
            for s in generators:
                m = _matmul(s, w.matrix)
                if m in seen:
                    continue
                elem = WeylElement(m, depth, -w.det)
                seen[m] = elem
                ordered.append(elem)
                nxt.append(elem)
                if len(ordered) > bound:
                    raise GroupTooLarge("Weyl group exceeds bound", bound=bound)
        frontier = nxt
    logger.debug("Enumerated Weyl group of order %d from %d simple roots", len(ordered), len(simple))
    return WeylGroup(rank, tuple(ordered), simple)


def full_weyl(pair: SymmetricPair, bound: int = DEFAULT_WEYL_BOUND) -> WeylGroup:
    return enumerate_weyl(pair.positive_vectors, pair.form, pair.rank, bound)


def compact_weyl(pair: SymmetricPair, bound: int = DEFAULT_WEYL_BOUND) -> WeylGroup:
    return enumerate_weyl(pair.compact_positive, pair.form, pair.rank, bound)


def coset_reps(sub: WeylGroup, whole: WeylGroup) -> List[WeylElement]:
    """
    One representative per right coset sub·w, each of minimal length in
    its coset (ties broken by matrix entries).

    Raises:
        NotASubgroup: if ``sub`` is not contained in ``whole``.
    """
    missing = [w for w in sub.elements if not whole.contains(w)]
    if missing or whole.order % sub.order:
        raise NotASubgroup(
            "Subgroup is not contained in the ambient Weyl group",
            sub_order=sub.order,
            whole_order=whole.order,
        )
    covered = set()
    reps: List[WeylElement] = []
    for w in whole.sorted_elements:
        if w.key in covered:
            continue
        reps.append(w)
        for s in sub.elements:
            covered.add(tuple(x for row in _matmul(s.matrix, w.matrix) for x in row))
    if len(reps) * sub.order != whole.order:
        raise NotASubgroup("Coset count does not match the group orders")
    return reps


@dataclass(frozen=True)
class DominantResult:
    element: WeylElement
    weight: WeightVec
    strict: bool


def dominant_representative(
    mu: WeightVec, W: WeylGroup, positives: Sequence[WeightVec], form: BilinearForm
) -> DominantResult:
    """Shortest w ∈ W with wμ dominant for ``positives``."""
    for w in W.sorted_elements:
        image = w.act(mu)
        pairings = [form.pair(image, a) for a in positives]
        if all(p >= 0 for p in pairings):
            return DominantResult(w, image, all(p > 0 for p in pairings))
    # Unreachable for a genuine Weyl group of ``positives``.
    raise NotASubgroup("No dominant conjugate found", weight=mu)
