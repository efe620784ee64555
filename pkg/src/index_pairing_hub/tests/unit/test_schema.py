"""
Tests for the JSON-facing models.
"""

import json
import unittest

from pydantic import ValidationError

from index_pairing_hub.domain.conventions import (
    BernoulliConvention,
    ElementKind,
    QueryMode,
    SignConvention,
)
from index_pairing_hub.domain.schema import (
    ContributionTerm,
    GammaData,
    GroupSpec,
    IndexReport,
    QuerySpec,
)


class TestQuerySpec(unittest.TestCase):

    def test_lambda_alias_and_defaults(self):
        query = QuerySpec.model_validate({"group": "su11", "lambda": ["1/2"]})
        self.assertEqual(query.lambda_, ["1/2"])
        self.assertEqual(query.mode, QueryMode.ORBITAL)
        self.assertIsNone(query.sign_convention)
        self.assertFalse(query.diagnostics)

    def test_group_source_required(self):
        with self.assertRaises(ValidationError):
            QuerySpec.model_validate({"lambda": ["1/2"]})

    def test_empty_lambda(self):
        with self.assertRaises(ValidationError):
            QuerySpec.model_validate({"group": "su11", "lambda": []})

    def test_enums_from_strings(self):
        query = QuerySpec.model_validate(
            {
                "group": "su21",
                "lambda": ["0", "0", "0"],
                "element": {"type": "elliptic", "X": ["1/3", "0", "-1/3"]},
                "sign_convention": "plus",
                "bernoulli": "modern",
                "mode": "higher",
            }
        )
        self.assertEqual(query.element.type, ElementKind.ELLIPTIC)
        self.assertEqual(query.sign_convention, SignConvention.PLUS_EXP)
        self.assertEqual(query.bernoulli, BernoulliConvention.MODERN)
        with self.assertRaises(ValidationError):
            QuerySpec.model_validate({"group": "su11", "lambda": ["0"], "mode": "everything"})


class TestGammaData(unittest.TestCase):

    def test_defaults(self):
        data = GammaData()
        self.assertEqual(data.l, 0)
        self.assertIsNone(data.cusp_volume_ratios)
        self.assertIsNone(data.residual_traces)
        self.assertEqual(GammaData.zero().residual_traces, [])

    def test_negative_ratios_rejected(self):
        with self.assertRaises(ValidationError):
            GammaData(l=1, cusp_volume_ratios=[-1.0])
        with self.assertRaises(ValidationError):
            GammaData(l=-1)

    def test_negative_class_volume_rejected(self):
        element = {"type": "central"}
        GammaData.model_validate({"ss_classes": [{"element": element, "vol": 0.0}]})
        with self.assertRaises(ValidationError):
            GammaData.model_validate({"ss_classes": [{"element": element, "vol": -1.0}]})


class TestGroupSpec(unittest.TestCase):

    def test_shape_checks(self):
        base = {"name": "g", "rank": 2, "gram": [["1", "0"], ["0", "1"]], "simple_roots": [["1", "-1"]]}
        GroupSpec.model_validate(base)
        with self.assertRaises(ValidationError):
            GroupSpec.model_validate({**base, "gram": [["1"]]})
        with self.assertRaises(ValidationError):
            GroupSpec.model_validate({**base, "simple_roots": [["1"]]})


class TestIndexReport(unittest.TestCase):

    def test_json_uses_lambda_alias(self):
        report = IndexReport(
            group="su11",
            lambda_=["1/2"],
            mode=QueryMode.ORBITAL,
            sign_convention=SignConvention.MINUS_EXP,
            bernoulli=BernoulliConvention.CLASSICAL,
            terms=[ContributionTerm(label="tau:central", value=(1.0, 0.0), weighted=(1.0, 0.0))],
            total=(1.0, 0.0),
        )
        payload = json.loads(report.model_dump_json(by_alias=True))
        self.assertEqual(payload["lambda"], ["1/2"])
        self.assertEqual(payload["sign_convention"], "minus")
        self.assertEqual(payload["total"], [1.0, 0.0])
        self.assertEqual(IndexReport.model_validate(payload), report)


if __name__ == "__main__":
    unittest.main()
