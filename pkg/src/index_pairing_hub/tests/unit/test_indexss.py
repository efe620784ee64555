"""
Tests for semisimple orbital integrals of the Dirac index.
"""

import random
import unittest
from fractions import Fraction

import pytest

from index_pairing_hub.domain.conventions import ElementKind, SignConvention
from index_pairing_hub.domain.errors import (
    InvalidInput,
    MisclassifiedElement,
    NotDominant,
    NotIntegral,
    NotSupported,
    WrongElementKind,
)
from index_pairing_hub.domain.rootsys import centralizer_subsystem
from index_pairing_hub.domain.schema import ElementSpec
from index_pairing_hub.domain.weights import WeightVec, format_fraction
from index_pairing_hub.domain.weyl import compact_weyl
from index_pairing_hub.services.indexss import (
    DiracInput,
    classify_element,
    conjugate_element,
    dense_powers_value,
    element_order,
    evaluate_semisimple,
    formal_degree,
    coset_sum_terms,
    resolve_sign_convention,
    tau_central,
    tau_elliptic,
    tau_hyperbolic,
)

TOL = 1e-8


def _close(a: complex, b: complex) -> bool:
    return abs(a - b) <= TOL * max(1.0, abs(b))


def _element(pair, kind, X=None):
    coords = None if X is None else [x if isinstance(x, str) else format_fraction(x) for x in X]
    return classify_element(pair, ElementSpec(type=kind, X=coords))


def _rho_plus_rho_c(pair):
    return pair.rho + pair.rho_c


def _random_torus(rng, pair, numerators, denominators):
    """Random X in the span of the coroots, so traceless for su(p,q)."""
    X = WeightVec.zero(pair.rank)
    for alpha in pair.simple_roots():
        c = Fraction(rng.randint(*numerators), rng.choice(denominators))
        X = X + pair.form.lower(alpha).scale(c)
    return list(X.coords)


class TestDiracInput(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su11, su21):
        self.su11 = su11.pair
        self.su21 = su21.pair

    def test_valid_weights(self):
        inp = DiracInput.create(self.su21, WeightVec.of(["3/2", "1/2", "-2"]))
        self.assertEqual(inp.lambda_plus_rho_c, WeightVec.of(["2", "0", "-2"]))
        DiracInput.create(self.su21, self.su21.rho_n)
        DiracInput.create(self.su11, WeightVec.of(["5/2"]))

    def test_wrong_length(self):
        with self.assertRaises(InvalidInput):
            DiracInput.create(self.su11, WeightVec.of(["1/2", "0"]))

    def test_not_dominant(self):
        with self.assertRaises(NotDominant):
            DiracInput.create(self.su21, WeightVec.of(["-1/2", "1/2", "0"]))

    def test_not_integral(self):
        with self.assertRaises(NotIntegral):
            DiracInput.create(self.su11, WeightVec.of(["1/3"]))


class TestClassification(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su11, su21):
        self.su11 = su11.pair
        self.su21 = su21.pair

    def test_central_without_coordinates_is_identity(self):
        gamma = _element(self.su21, ElementKind.CENTRAL)
        self.assertEqual(gamma.torus.X, (Fraction(0),) * 3)
        self.assertEqual(element_order(gamma, self.su21), 1)

    def test_order_is_taken_modulo_the_centre(self):
        central = _element(self.su21, ElementKind.CENTRAL, ["1/3", "1/3", "-2/3"])
        self.assertEqual(element_order(central, self.su21), 1)
        quarter = _element(self.su21, ElementKind.ELLIPTIC, ["1/4", "-1/2", "1/4"])
        self.assertEqual(element_order(quarter, self.su21), 4)
        self.assertEqual(element_order(_element(self.su11, ElementKind.CENTRAL, ["1"]), self.su11), 1)

    def test_coordinates_must_be_traceless_for_su(self):
        for kind, X in (
            (ElementKind.ELLIPTIC, ["1/3", "0", "0"]),
            (ElementKind.ELLIPTIC, ["1/5", "0", "1/3"]),
            (ElementKind.CENTRAL, ["1/3", "1/3", "1/3"]),
        ):
            with self.assertRaises(InvalidInput, msg=f"X={X}"):
                _element(self.su21, kind, X)
        _element(self.su21, ElementKind.ELLIPTIC, ["1/5", "2/15", "-1/3"])

    def test_false_central_claim(self):
        with self.assertRaises(MisclassifiedElement):
            _element(self.su11, ElementKind.CENTRAL, ["1/2"])

    def test_elliptic_needs_coordinates(self):
        with self.assertRaises(InvalidInput):
            _element(self.su11, ElementKind.ELLIPTIC)

    def test_coordinate_count_is_checked(self):
        with self.assertRaises(InvalidInput):
            _element(self.su21, ElementKind.ELLIPTIC, ["1/2"])

    def test_hyperbolic_has_no_torus_part(self):
        gamma = _element(self.su21, ElementKind.HYPERBOLIC)
        self.assertIsNone(gamma.torus)
        self.assertIsNone(element_order(gamma, self.su21))


class TestCentralElements(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su11, su21, computation):
        self.su11 = su11.pair
        self.su21 = su21.pair
        self.computation = computation

    def test_formal_degree_su21(self):
        self.assertEqual(formal_degree(WeightVec.of(["2", "0", "-2"]), self.su21), 8)

    def test_identity_gives_formal_degree(self):
        inp = DiracInput.create(self.su21, WeightVec.of(["3/2", "1/2", "-2"]))
        self.assertEqual(tau_central(inp, _element(self.su21, ElementKind.CENTRAL)), 8)

    def test_su11_discrete_series_family(self):
        identity = _element(self.su11, ElementKind.CENTRAL)
        minus_one = _element(self.su11, ElementKind.CENTRAL, ["1"])
        for k in range(1, 11):
            inp = DiracInput.create(self.su11, WeightVec.of([Fraction(k, 2)]))
            self.assertEqual(tau_central(inp, identity), k)
            self.assertEqual(tau_central(inp, minus_one), (-1) ** (k - 1) * k)

    def test_elliptic_formula_reduces_to_central_one(self):
        lam = WeightVec.of(["3/2", "1/2", "-2"])
        inp = DiracInput.create(self.su21, lam)
        for X in (["0", "0", "0"], ["1/3", "1/3", "-2/3"], ["2/3", "2/3", "-4/3"]):
            central = tau_central(inp, _element(self.su21, ElementKind.CENTRAL, X))
            elliptic = tau_elliptic(inp, _element(self.su21, ElementKind.ELLIPTIC, X), self.computation)
            self.assertTrue(_close(elliptic.value, central), msg=f"X={X}")
            self.assertEqual(len(elliptic.terms), 1)

    def test_formal_degree_is_skew_under_simple_reflections(self):
        for pair, mu in (
            (self.su21, WeightVec.of(["2", "0", "-2"])),
            (self.su21, WeightVec.of(["5/2", "1/2", "-3"])),
            (self.su11, WeightVec.of(["3/2"])),
        ):
            degree = formal_degree(mu, pair)
            self.assertNotEqual(degree, 0)
            for alpha in pair.simple_roots():
                reflected = pair.form.reflect(mu, alpha)
                self.assertEqual(formal_degree(reflected, pair), -degree, msg=f"{pair.name} α={alpha}")

    def test_singular_lambda_plus_rho_c_gives_zero(self):
        cases = (
            (self.su21, WeightVec.of(["1/6", "1/6", "-1/3"])),
            (self.su11, WeightVec.of(["0"])),
        )
        for pair, lam in cases:
            inp = DiracInput.create(pair, lam)
            for X in (None, ["0"] * pair.rank):
                self.assertEqual(tau_central(inp, _element(pair, ElementKind.CENTRAL, X)), 0, msg=pair.name)

    def test_wrong_kind(self):
        inp = DiracInput.create(self.su11, WeightVec.of(["1/2"]))
        with self.assertRaises(WrongElementKind):
            tau_central(inp, _element(self.su11, ElementKind.ELLIPTIC, ["1/4"]))


class TestEllipticElements(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su11, su21, computation):
        self.su11 = su11.pair
        self.su21 = su21.pair
        self.computation = computation

    def test_su11_quarter_turn(self):
        inp = DiracInput.create(self.su11, WeightVec.of(["1/2"]))
        result = tau_elliptic(inp, _element(self.su11, ElementKind.ELLIPTIC, ["1/4"]), self.computation)
        self.assertTrue(_close(result.value, complex(-0.5, 0.5)))
        self.assertTrue(result.paths_agree)
        self.assertEqual(result.sign_convention, SignConvention.MINUS_EXP)

    def test_su21_singular_element_and_its_conjugate(self):
        inp = DiracInput.create(self.su21, self.su21.rho_n)
        expected = complex(-0.5, 0.5)
        for X in (["1/4", "-1/2", "1/4"], ["-1/2", "1/4", "1/4"]):
            result = tau_elliptic(inp, _element(self.su21, ElementKind.ELLIPTIC, X), self.computation)
            self.assertTrue(_close(result.value, expected), msg=f"X={X}: {result.value}")

    def test_coset_count(self):
        X = [Fraction(1, 4), Fraction(-1, 2), Fraction(1, 4)]
        inp = DiracInput.create(self.su21, self.su21.rho_n)
        gamma = _element(self.su21, ElementKind.ELLIPTIC, X)
        terms = coset_sum_terms(self.su21, inp.lam, gamma.torus, self.computation)
        cent = centralizer_subsystem(self.su21, X)
        expected = compact_weyl(self.su21).order // compact_weyl(cent).order
        self.assertEqual(len(terms), expected)

    def test_hyperbolic_vanishes(self):
        inp = DiracInput.create(self.su21, self.su21.rho_n)
        self.assertEqual(tau_hyperbolic(inp), 0)
        result = evaluate_semisimple(inp, _element(self.su21, ElementKind.HYPERBOLIC))
        self.assertEqual(result.kind, ElementKind.HYPERBOLIC)
        self.assertEqual(result.value, 0)

    def test_dense_powers_rejects_singular_elements(self):
        inp = DiracInput.create(self.su21, self.su21.rho_n)
        gamma = _element(self.su21, ElementKind.ELLIPTIC, ["1/4", "-1/2", "1/4"])
        with self.assertRaises(NotSupported):
            dense_powers_value(inp, gamma, self.computation)


class TestAcrossCatalog(unittest.TestCase):
    """Properties checked on every catalog group at λ = ρ + ρ_c."""

    @pytest.fixture(autouse=True)
    def _catalog(self, catalog, computation):
        self.catalog = catalog
        self.computation = computation

    def _inputs(self):
        for name in self.catalog.names():
            pair = self.catalog.lookup(name).pair
            yield pair, DiracInput.create(pair, _rho_plus_rho_c(pair))

    def test_coset_sum_matches_dense_powers_on_regular_elements(self):
        rng = random.Random(11)
        for pair, inp in self._inputs():
            checked = 0
            for _ in range(2000):
                if checked >= 50:
                    break
                X = _random_torus(rng, pair, (-12, 12), range(2, 14))
                if centralizer_subsystem(pair, X).roots:
                    continue
                gamma = _element(pair, ElementKind.ELLIPTIC, X)
                coset_sum = tau_elliptic(inp, gamma, self.computation).value
                dense = dense_powers_value(inp, gamma, self.computation)
                self.assertTrue(_close(coset_sum, dense), msg=f"{pair.name} X={X}")
                checked += 1
            self.assertGreaterEqual(checked, 50, msg=pair.name)

    def test_conjugation_invariance(self):
        rng = random.Random(5)
        for pair, inp in self._inputs():
            W_K = compact_weyl(pair)
            for _ in range(4):
                X = _random_torus(rng, pair, (-6, 6), [2, 3, 4, 6])
                gamma = _element(pair, ElementKind.ELLIPTIC, X)
                base = tau_elliptic(inp, gamma, self.computation).value
                for w in W_K.elements:
                    moved = conjugate_element(gamma, w, pair)
                    value = tau_elliptic(inp, moved, self.computation).value
                    self.assertTrue(_close(value, base), msg=f"{pair.name} X={X} w={w.to_strings()}")

    def test_closed_form_agrees_with_coset_sum(self):
        rng = random.Random(3)
        for pair, inp in self._inputs():
            for _ in range(6):
                X = _random_torus(rng, pair, (-4, 4), [2, 3, 4])
                result = tau_elliptic(inp, _element(pair, ElementKind.ELLIPTIC, X), self.computation)
                self.assertTrue(result.paths_agree, msg=f"{pair.name} X={X}")


class TestSignResolution(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _fixtures(self, catalog, computation, sign_resolution):
        self.catalog = catalog
        self.computation = computation
        self.recorded = sign_resolution

    def test_recorded_convention_is_reproduced(self):
        expected = SignConvention(self.recorded["resolved_sign_convention"])
        for name in self.recorded["groups"]:
            pair = self.catalog.lookup(name).pair
            inp = DiracInput.create(pair, _rho_plus_rho_c(pair))
            gamma = _element(pair, ElementKind.ELLIPTIC, self.recorded["regular_elements"][name])
            self.assertEqual(resolve_sign_convention(inp, gamma, self.computation), expected)

    def test_other_convention_is_flagged(self):
        pair = self.catalog.lookup("su21").pair
        inp = DiracInput.create(pair, _rho_plus_rho_c(pair))
        gamma = _element(pair, ElementKind.ELLIPTIC, self.recorded["regular_elements"]["su21"])
        plus = self.computation.with_overrides(sign_convention=SignConvention.PLUS_EXP)
        result = tau_elliptic(inp, gamma, plus)
        self.assertFalse(result.paths_agree)
        self.assertEqual(result.sign_convention, SignConvention.PLUS_EXP)


if __name__ == "__main__":
    unittest.main()
