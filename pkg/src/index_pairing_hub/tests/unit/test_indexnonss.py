"""
Tests for the non-semisimple terms of real rank one groups.
"""

import math
import unittest
from dataclasses import replace
from fractions import Fraction

import pytest

from index_pairing_hub.domain.conventions import BernoulliConvention, NormReading
from index_pairing_hub.domain.errors import (
    DegenerateZ0,
    InvalidRootDatum,
    MissingGammaData,
    NonIntegralK,
    NotSupported,
)
from index_pairing_hub.domain.schema import GammaData, RankOneSpec
from index_pairing_hub.domain.weights import WeightVec
from index_pairing_hub.services.indexnonss import (
    RankOneData,
    bernoulli,
    c2_gamma,
    epsilon_lambda,
    epsilon_Rplus,
    k_of_mu,
    lambda_norm,
    sphere_area,
    tau_lambda_coefficient,
    tau_lambda_contribution,
    tau_n0_contribution,
    tau_rem_contribution,
    tau_res_contribution,
)
from index_pairing_hub.services.indexss import DiracInput


def _cusps(l: int = 1, ratios=(1.0,), **extra) -> GammaData:
    return GammaData(l=l, cusp_volume_ratios=list(ratios), **extra)


class TestConstants(unittest.TestCase):

    def test_classical_bernoulli(self):
        self.assertEqual(
            [bernoulli(n) for n in range(4)],
            [Fraction(1), Fraction(1, 6), Fraction(1, 30), Fraction(1, 42)],
        )

    def test_modern_bernoulli(self):
        modern = BernoulliConvention.MODERN
        self.assertEqual(
            [bernoulli(n, modern) for n in range(5)],
            [Fraction(1), Fraction(-1, 2), Fraction(1, 6), Fraction(0), Fraction(-1, 30)],
        )

    def test_modern_bernoulli_recurrence(self):
        modern = BernoulliConvention.MODERN
        for n in range(1, 16):
            total = sum(math.comb(n + 1, k) * bernoulli(k, modern) for k in range(n + 1))
            self.assertEqual(total, 0, msg=f"n={n}")

    def test_classical_numbers_are_even_modern_ones(self):
        for n in range(1, 8):
            self.assertEqual(bernoulli(n), abs(bernoulli(2 * n, BernoulliConvention.MODERN)))

    def test_negative_index(self):
        with self.assertRaises(ValueError):
            bernoulli(-1)

    def test_sphere_area(self):
        self.assertAlmostEqual(sphere_area(2), 2 * math.pi)
        self.assertAlmostEqual(sphere_area(3), 4 * math.pi)
        self.assertAlmostEqual(sphere_area(4), 2 * math.pi ** 2)
        with self.assertRaises(ValueError):
            sphere_area(0)

    def test_sphere_area_recurrence(self):
        for d in range(1, 12):
            self.assertAlmostEqual(sphere_area(d + 2), sphere_area(d) * 2 * math.pi / d, msg=f"d={d}")

    def test_c2_gamma(self):
        expected = 2 * (2 * math.pi) ** 2 / 2 / 6
        self.assertAlmostEqual(c2_gamma(_cusps(ratios=(1.5, 0.5)), 1, BernoulliConvention.CLASSICAL), expected)
        self.assertEqual(c2_gamma(GammaData.zero(), 1, BernoulliConvention.CLASSICAL), 0.0)
        with self.assertRaises(MissingGammaData):
            c2_gamma(GammaData(), 1, BernoulliConvention.CLASSICAL)


class TestRankOneData(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su21, so41):
        self.su21 = su21
        self.so41 = so41

    def test_catalog_data(self):
        data = self.su21.rank_one
        self.assertEqual(data.su_n, 1)
        self.assertEqual(data.m_pair.roots, ())
        self.assertEqual(len(self.so41.rank_one.m_pair.positive_vectors), 1)

    def test_dimension_mismatch(self):
        spec = RankOneSpec(dim_n_lambda=3, dim_n_2lambda=1, zvec=["1", "0", "-1"])
        with self.assertRaises(InvalidRootDatum):
            RankOneData.from_spec(self.su21.pair, spec)

    def test_m_roots_must_vanish_on_zvec(self):
        spec = RankOneSpec(
            dim_n_lambda=2, dim_n_2lambda=1, zvec=["1", "0", "-1"], m_simple_roots=[["1", "-1", "0"]]
        )
        with self.assertRaises(InvalidRootDatum):
            RankOneData.from_spec(self.su21.pair, spec)

    def test_restrict_kills_zvec_direction(self):
        data = self.su21.rank_one
        self.assertTrue(data.restrict(WeightVec.of(["1", "0", "-1"]), self.su21.pair).is_zero())
        restricted = data.restrict(WeightVec.of(["1", "1", "-2"]), self.su21.pair)
        self.assertEqual(restricted.dot(data.zvec), 0)

    def test_k_of_mu(self):
        data = self.su21.rank_one
        self.assertEqual(k_of_mu(WeightVec.of(["2", "0", "-2"]), data), 4)
        with self.assertRaises(NonIntegralK):
            k_of_mu(WeightVec.of(["1/2", "0", "0"]), data)

    def test_epsilon_signs(self):
        pair = self.su21.pair
        data = self.su21.rank_one
        self.assertEqual(epsilon_Rplus(data, pair), 1)
        with self.assertRaises(DegenerateZ0):
            epsilon_Rplus(replace(data, z0=WeightVec.of(["1", "1", "1"])), pair)
        self.assertEqual(epsilon_lambda(pair.rho, data, pair), 1)
        self.assertEqual(epsilon_lambda(WeightVec.of(["1", "-1", "0"]), data, pair), -1)
        with self.assertRaises(NotSupported):
            epsilon_lambda(WeightVec.of(["1", "1", "-2"]), data, pair)


class TestUnipotentTerm(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su21, so41, computation):
        self.su21 = su21
        self.so41 = so41
        self.computation = computation

    def test_su21_at_rho_n(self):
        inp = DiracInput.create(self.su21.pair, self.su21.pair.rho_n)
        value = tau_n0_contribution(inp, self.su21.rank_one, _cusps(), self.computation)
        self.assertAlmostEqual(value, 0.5)

    def test_scales_with_dim_w(self):
        inp = DiracInput.create(self.su21.pair, WeightVec.of(["3/2", "1/2", "-2"]))
        value = tau_n0_contribution(inp, self.su21.rank_one, _cusps(), self.computation)
        self.assertAlmostEqual(value, 1.0)

    def test_modern_bernoulli_reading(self):
        inp = DiracInput.create(self.su21.pair, self.su21.pair.rho_n)
        modern = self.computation.with_overrides(bernoulli=BernoulliConvention.MODERN)
        value = tau_n0_contribution(inp, self.su21.rank_one, _cusps(), modern)
        self.assertAlmostEqual(value, -1.5)

    def test_highest_weight_norm_reading(self):
        inp = DiracInput.create(self.su21.pair, self.su21.pair.rho_n)
        reading = self.computation.with_overrides(norm_reading=NormReading.HIGHEST_WEIGHT)
        self.assertAlmostEqual(lambda_norm(inp, self.su21.rank_one, reading.norm_reading), math.sqrt(1.5))
        value = tau_n0_contribution(inp, self.su21.rank_one, _cusps(), reading)
        self.assertAlmostEqual(value, 0.5 * math.sqrt(1.5))

    def test_missing_cusp_data(self):
        inp = DiracInput.create(self.su21.pair, self.su21.pair.rho_n)
        with self.assertRaises(MissingGammaData):
            tau_n0_contribution(inp, self.su21.rank_one, GammaData(), self.computation)

    def test_zero_outside_su_2n_1(self):
        inp = DiracInput.create(self.so41.pair, self.so41.pair.rho_n)
        self.assertEqual(tau_n0_contribution(inp, self.so41.rank_one, _cusps(), self.computation), 0.0)


class TestLambdaTerm(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su21, computation):
        self.su21 = su21
        self.computation = computation

    def test_contribution_vanishes(self):
        self.assertEqual(tau_lambda_contribution(), 0.0)

    def test_coefficient(self):
        inp = DiracInput.create(self.su21.pair, self.su21.pair.rho_n)
        data = self.su21.rank_one
        self.assertEqual(tau_lambda_coefficient(inp, data, _cusps(), self.computation), 0.0)
        value = tau_lambda_coefficient(inp, data, _cusps(C_lambda=2.0), self.computation)
        self.assertAlmostEqual(value, 1 / math.pi)


class TestResidualTerm(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, su11, su21):
        self.su11 = su11
        self.su21 = su21

    def test_regular_weights_have_no_residual_term(self):
        inp = DiracInput.create(self.su21.pair, self.su21.pair.rho_n)
        self.assertEqual(tau_res_contribution(inp, GammaData()), 0.0)

    def test_singular_weight_uses_traces(self):
        inp = DiracInput.create(self.su11.pair, WeightVec.of(["0"]))
        self.assertAlmostEqual(tau_res_contribution(inp, GammaData(residual_traces=[1.5, 2.0])), 7.0)
        with self.assertRaises(MissingGammaData):
            tau_res_contribution(inp, GammaData())

    def test_singular_weight_su21(self):
        inp = DiracInput.create(self.su21.pair, WeightVec.of(["1/6", "1/6", "-1/3"]))
        self.assertAlmostEqual(tau_res_contribution(inp, GammaData(residual_traces=[0.5])), 1.0)
        self.assertEqual(tau_res_contribution(inp, GammaData.zero()), 0.0)
        with self.assertRaises(MissingGammaData):
            tau_res_contribution(inp, GammaData(l=1, cusp_volume_ratios=[1.0]))


class TestRemainderTerm(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _groups(self, catalog, su11, su21, so41, computation):
        self.catalog = catalog
        self.su11 = su11
        self.su21 = su21
        self.so41 = so41
        self.computation = computation

    def test_su21_values(self):
        pair = self.su21.pair
        data = self.su21.rank_one
        cases = [
            (pair.rho_n, 0.0),
            (WeightVec.of(["1/2", "-1/2", "0"]), -1.0),
            (WeightVec.of(["3/2", "1/2", "-2"]), 0.0),
        ]
        for lam, expected in cases:
            inp = DiracInput.create(pair, lam)
            value = tau_rem_contribution(inp, data, _cusps(), self.computation)
            self.assertAlmostEqual(value, expected, msg=f"λ={lam}")

    def test_scales_with_cusp_count(self):
        pair = self.su21.pair
        inp = DiracInput.create(pair, WeightVec.of(["1/2", "-1/2", "0"]))
        value = tau_rem_contribution(inp, self.su21.rank_one, _cusps(l=3, ratios=(1, 1, 1)), self.computation)
        self.assertAlmostEqual(value, -3.0)

    def test_no_cusps(self):
        pair = self.su21.pair
        inp = DiracInput.create(pair, WeightVec.of(["1/2", "-1/2", "0"]))
        self.assertEqual(tau_rem_contribution(inp, self.su21.rank_one, GammaData.zero(), self.computation), 0.0)

    def test_real_hyperbolic_four_space(self):
        inp = DiracInput.create(self.so41.pair, self.so41.pair.rho_n)
        self.assertEqual(tau_rem_contribution(inp, self.so41.rank_one, _cusps(), self.computation), 0.0)

    def test_singular_weight(self):
        inp = DiracInput.create(self.su11.pair, WeightVec.of(["0"]))
        with self.assertRaises(NotSupported):
            tau_rem_contribution(inp, self.su11.rank_one, _cusps(), self.computation)

    def test_sign_flips_when_positive_system_crosses_a_wall(self):
        pair = self.su21.pair
        data = self.su21.rank_one
        inp = DiracInput.create(pair, WeightVec.of(["1/2", "-1/2", "0"]))
        # s_{e1−e2} applied to R+(G, T): only e1 − e2 changes sign.
        crossed = replace(
            data,
            rplus0=(WeightVec.of(["-1", "1", "0"]), WeightVec.of(["0", "1", "-1"]), WeightVec.of(["1", "0", "-1"])),
        )
        mu = inp.lambda_plus_rho_c
        self.assertEqual(epsilon_lambda(mu, crossed, pair), -epsilon_lambda(mu, data, pair))
        base = tau_rem_contribution(inp, data, _cusps(), self.computation)
        flipped = tau_rem_contribution(inp, crossed, _cusps(), self.computation)
        self.assertAlmostEqual(base, -1.0)
        self.assertAlmostEqual(flipped, -base)

    def test_m_weyl_group_outside_w_k(self):
        for name in ("so41", "so61"):
            entry = self.catalog.lookup(name)
            inp = DiracInput.create(entry.pair, entry.pair.rho + entry.pair.rho_c)
            data = replace(entry.rank_one, real_hyperbolic_dim=None)
            with self.assertRaises(InvalidRootDatum, msg=name):
                tau_rem_contribution(inp, data, _cusps(), self.computation)


if __name__ == "__main__":
    unittest.main()
