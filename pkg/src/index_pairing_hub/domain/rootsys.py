"""
Root systems of equal-rank symmetric pairs (G, K).

A ``SymmetricPair`` carries every root of G with its positivity and its
compact/noncompact flag, the invariant form and dim(G/K). The half sums
ρ, ρ_c and ρ_n are derived on demand.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from index_pairing_hub.domain.errors import InvalidRootDatum
from index_pairing_hub.domain.schema import Violation
from index_pairing_hub.domain.weights import BilinearForm, WeightVec, matrix_rank

logger = logging.getLogger(__name__)

DEFAULT_ROOT_BOUND = 10_000


@dataclass(frozen=True)
class Root:
    vec: WeightVec
    positive: bool
    compact: bool

    def negate(self) -> "Root":
        return Root(-self.vec, not self.positive, self.compact)


def half_sum(roots: Iterable[WeightVec], rank: int) -> WeightVec:
    """½ Σ roots; the zero vector for an empty family."""
    total = WeightVec.zero(rank)
    for vec in roots:
        total = total + vec
    return total.scale(Fraction(1, 2))


def indecomposable(positives: Sequence[WeightVec]) -> Tuple[WeightVec, ...]:
    """Positive roots that are not a sum of two positive roots of the same family."""
    pool = set(positives)
    simple = []
    for beta in positives:
        if not any((beta - gamma) in pool for gamma in positives if gamma != beta):
            simple.append(beta)
    return tuple(simple)


@dataclass(frozen=True)
class SymmetricPair:
    """
    An equal-rank symmetric pair described through its root datum.

    ``roots`` lists the positive roots first (in catalog order) followed
    by their negatives in the same order.
    """

    name: str
    rank: int
    form: BilinearForm
    roots: Tuple[Root, ...]
    dim_GK: int
    equal_rank: bool = True

    @cached_property
    def positive_roots(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.roots if r.positive)

    @cached_property
    def positive_vectors(self) -> Tuple[WeightVec, ...]:
        return tuple(r.vec for r in self.positive_roots)

    @cached_property
    def compact_positive(self) -> Tuple[WeightVec, ...]:
        return tuple(r.vec for r in self.positive_roots if r.compact)

    @cached_property
    def noncompact_positive(self) -> Tuple[WeightVec, ...]:
        return tuple(r.vec for r in self.positive_roots if not r.compact)

    @cached_property
    def root_vectors(self) -> frozenset:
        return frozenset(r.vec for r in self.roots)

    @cached_property
    def rho(self) -> WeightVec:
        return half_sum(self.positive_vectors, self.rank)

    @cached_property
    def rho_c(self) -> WeightVec:
        return half_sum(self.compact_positive, self.rank)

    @cached_property
    def rho_n(self) -> WeightVec:
        return half_sum(self.noncompact_positive, self.rank)

    def simple_roots(self) -> Tuple[WeightVec, ...]:
        return indecomposable(self.positive_vectors)

    def is_compact(self, vec: WeightVec) -> Optional[bool]:
        for root in self.roots:
            if root.vec == vec:
                return root.compact
        return None

    def sub_pair(self, name: str, keep: Callable[[Root], bool]) -> "SymmetricPair":
        """Sub-pair on the roots satisfying ``keep`` (closed under negation by caller)."""
        roots = tuple(r for r in self.roots if keep(r))
        dim = sum(1 for r in roots if not r.compact)
        return SymmetricPair(name, self.rank, self.form, roots, dim, self.equal_rank)


def _order_roots(
    pos_coeffs: Dict[WeightVec, Tuple[int, ...]]
) -> List[WeightVec]:
    """Height first, then descending simple-root coefficients."""
    return sorted(
        pos_coeffs,
        key=lambda v: (sum(pos_coeffs[v]), tuple(-c for c in pos_coeffs[v])),
    )


def generate_root_system(
    simple_roots: Sequence[WeightVec],
    form: BilinearForm,
    bound: int = DEFAULT_ROOT_BOUND,
) -> Tuple[Root, ...]:
    """
    Close a set of simple roots under the simple reflections.

    Returns positives (ordered by height, then descending coefficient tuple)
    followed by their negatives. Every root is flagged noncompact; callers
    assign compactness afterwards.

    Raises:
        InvalidRootDatum: dependent simple roots, non-integral Cartan
            integers, mixed-sign coefficients or more than ``bound`` roots.
    """
    simple = list(simple_roots)
    if not simple:
        return ()
    rank = form.rank
    if any(a.rank != rank for a in simple):
        raise InvalidRootDatum("Simple root length does not match the form rank")
    if matrix_rank([a.coords for a in simple]) != len(simple):
        raise InvalidRootDatum("Simple roots are linearly dependent")
    for a in simple:
        for b in simple:
            cartan = 2 * form.pair(a, b) / form.pair(b, b)
            if cartan.denominator != 1:
                raise InvalidRootDatum(
                    "Cartan integer is not integral", alpha=a, beta=b, value=cartan
                )

    # Coefficients via the Gram matrix of the simple roots: c = A⁻¹ (v, α_j)_j.
    simple_gram = BilinearForm(
        tuple(tuple(form.pair(a, b) for b in simple) for a in simple)
    )

    def coefficients(v: WeightVec) -> Tuple[int, ...]:
        pairings = WeightVec(tuple(form.pair(v, a) for a in simple))
        coeffs = simple_gram.raise_(pairings).coords
        if any(c.denominator != 1 for c in coeffs):
            raise InvalidRootDatum("Root is not an integral combination", root=v)
        return tuple(int(c) for c in coeffs)

    found: Set[WeightVec] = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for v in frontier:
            for a in simple:
                w = form.reflect(v, a)
                if w not in found:
                    found.add(w)
                    nxt.append(w)
                    if len(found) > bound:
                        raise InvalidRootDatum(
                            "Root closure exceeded bound", bound=bound
                        )
        frontier = nxt

    positives: Dict[WeightVec, Tuple[int, ...]] = {}
    for v in found:
        coeffs = coefficients(v)
        if all(c >= 0 for c in coeffs):
            positives[v] = coeffs
        elif not all(c <= 0 for c in coeffs):
            raise InvalidRootDatum("Root has coefficients of mixed sign", root=v)

    ordered = _order_roots(positives)
    logger.debug("Generated %d positive roots from %d simple roots", len(ordered), len(simple))
    pos = tuple(Root(v, True, False) for v in ordered)
    return pos + tuple(r.negate() for r in pos)


def build_pair(
    name: str,
    simple_roots: Sequence[WeightVec],
    form: BilinearForm,
    compact_indices: Iterable[int],
    equal_rank: bool = True,
    bound: int = DEFAULT_ROOT_BOUND,
) -> SymmetricPair:
    """Generate the roots and flag compactness by positive-root index."""
    roots = generate_root_system(simple_roots, form, bound)
    n_pos = len(roots) // 2
    compact = set(compact_indices)
    bad = [i for i in compact if not 0 <= i < n_pos]
    if bad:
        raise InvalidRootDatum("Compact root index out of range", indices=bad)
    flagged = [
        Root(r.vec, True, i in compact) for i, r in enumerate(roots[:n_pos])
    ]
    full = tuple(flagged) + tuple(r.negate() for r in flagged)
    dim = sum(1 for r in full if not r.compact)
    return SymmetricPair(name, form.rank, form, full, dim, equal_rank)


def centralizer_subsystem(pair: SymmetricPair, X: Sequence[Fraction]) -> SymmetricPair:
    """Roots α with ⟨α, X⟩ ∈ ℤ: the root datum of (G_γ, K_γ) for γ = exp(2πiX)."""
    return pair.sub_pair(
        f"{pair.name}_centralizer",
        lambda r: r.vec.dot(X).denominator == 1,
    )


def in_coroot_span(pair: SymmetricPair, X: Sequence[Fraction]) -> bool:
    """
    Whether X lies in the span of the coroots, i.e. in the Lie algebra of
    the torus of the semisimple group rather than the ambient coordinates.

    For the su(p,q) entries this is the trace-zero condition.
    """
    coroots = [pair.form.lower(a).coords for a in pair.positive_vectors]
    if not coroots:
        return all(x == 0 for x in X)
    return matrix_rank(coroots + [tuple(X)]) == matrix_rank(coroots)


def is_regular(mu: WeightVec, pair: SymmetricPair) -> bool:
    return all(pair.form.pair(mu, a) != 0 for a in pair.positive_vectors)


def is_dominant(mu: WeightVec, positives: Iterable[WeightVec], form: BilinearForm) -> bool:
    return all(form.pair(mu, a) >= 0 for a in positives)


def is_integral(mu: WeightVec, roots: Iterable[WeightVec], form: BilinearForm) -> bool:
    """2(μ,α)/(α,α) ∈ ℤ for every α."""
    return all(
        (2 * form.pair(mu, a) / form.pair(a, a)).denominator == 1 for a in roots
    )


def validate_pair(pair: SymmetricPair) -> List[Violation]:
    """Check the structural axioms of a root datum; empty list means valid."""
    violations: List[Violation] = []
    by_vec = {r.vec: r for r in pair.roots}
    form = pair.form

    for r in pair.roots:
        neg = by_vec.get(-r.vec)
        if neg is None:
            violations.append(
                Violation(
                    code="negation",
                    message="negative of a root is missing",
                    roots=[r.vec.to_strings()],
                )
            )
            continue
        if neg.positive == r.positive:
            violations.append(
                Violation(
                    code="positivity",
                    message="exactly one of ±α must be positive",
                    roots=[r.vec.to_strings()],
                )
            )
        if neg.compact != r.compact:
            violations.append(
                Violation(
                    code="compactness_sign",
                    message="α and −α must share compactness",
                    roots=[r.vec.to_strings()],
                )
            )

    for a in pair.roots:
        for b in pair.roots:
            reflected = form.reflect(b.vec, a.vec)
            if reflected not in by_vec:
                violations.append(
                    Violation(
                        code="reflection_closure",
                        message="s_α(β) is not a root",
                        roots=[a.vec.to_strings(), b.vec.to_strings()],
                    )
                )
            total = a.vec + b.vec
            target = by_vec.get(total)
            if target is not None and target.compact != (a.compact == b.compact):
                violations.append(
                    Violation(
                        code="grading",
                        message="compactness is not a ℤ/2 grading on root sums",
                        roots=[a.vec.to_strings(), b.vec.to_strings()],
                    )
                )

    noncompact = sum(1 for r in pair.roots if not r.compact)
    if noncompact != pair.dim_GK:
        violations.append(
            Violation(
                code="dimension",
                message=f"dim G/K is {pair.dim_GK} but there are {noncompact} noncompact roots",
            )
        )
    if pair.dim_GK % 2:
        violations.append(Violation(code="dimension_parity", message="dim G/K must be even"))
    if violations:
        logger.debug("Root datum %s has %d violations", pair.name, len(violations))
    return violations
