"""
Tests for the group catalog and user group files.
"""

import unittest

import pytest

from index_pairing_hub.domain.errors import InvalidInput, InvalidRootDatum, UnknownGroup
from index_pairing_hub.domain.rootsys import validate_pair
from index_pairing_hub.services.catalog import (
    GroupCatalog,
    build_entry,
    load_group_file,
    parse_group_spec,
)
from index_pairing_hub.tests.conftest import load_fixture

SHIPPED = ["so21", "so41", "so61", "su11", "su21", "su22", "su31", "su32", "su41"]


class TestGroupCatalog(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _catalog(self, catalog, fixtures_dir):
        self.catalog = catalog
        self.fixtures_dir = fixtures_dir

    def test_names(self):
        self.assertEqual(self.catalog.names(), SHIPPED)

    def test_every_entry_is_a_valid_equal_rank_pair(self):
        for name in SHIPPED:
            entry = self.catalog.lookup(name)
            self.assertEqual(validate_pair(entry.pair), [], msg=name)
            self.assertTrue(entry.pair.equal_rank)
            self.assertEqual(entry.pair.dim_GK % 2, 0)
            self.assertIn("G", [levi.name for levi in entry.levis])

    def test_rank_one_data_where_expected(self):
        for name in SHIPPED:
            entry = self.catalog.lookup(name)
            if name in ("su22", "su32"):
                self.assertIsNone(entry.rank_one, msg=name)
            else:
                self.assertIsNotNone(entry.rank_one, msg=name)

    def test_known_dimensions(self):
        self.assertEqual(self.catalog.lookup("su21").pair.dim_GK, 4)
        self.assertEqual(self.catalog.lookup("so41").pair.dim_GK, 4)
        self.assertEqual(self.catalog.lookup("su22").pair.dim_GK, 8)

    def test_lookup_is_cached(self):
        self.assertIs(self.catalog.lookup("su11"), self.catalog.lookup("su11"))

    def test_unknown_group(self):
        with self.assertRaises(UnknownGroup):
            self.catalog.lookup("sl3r")

    def test_unknown_levi(self):
        with self.assertRaises(InvalidInput):
            self.catalog.lookup("su21").levi("A2")

    def test_missing_directory(self):
        self.assertEqual(GroupCatalog(self.fixtures_dir / "absent").names(), [])


class TestUserGroups(unittest.TestCase):

    @pytest.fixture(autouse=True)
    def _paths(self, fixtures_dir):
        self.fixtures_dir = fixtures_dir

    def test_load_group_file(self):
        entry = load_group_file(self.fixtures_dir / "group_su11.json")
        self.assertEqual(entry.name, "user_su11")
        self.assertEqual([levi.name for levi in entry.levis], ["G", "T"])

    def test_grading_violation_is_rejected(self):
        with self.assertRaises(InvalidRootDatum) as ctx:
            load_group_file(self.fixtures_dir / "group_bad_grading.json")
        self.assertIn("grading", str(ctx.exception.context["violations"]))

    def test_unreadable_file(self):
        with self.assertRaises(InvalidInput):
            load_group_file(self.fixtures_dir / "absent.json")

    def test_malformed_spec(self):
        data = load_fixture("group_su11.json")
        data["gram"] = [["1", "0"]]
        with self.assertRaises(InvalidInput):
            parse_group_spec(data)

    def test_rank_one_dimension_mismatch(self):
        data = load_fixture("group_su11.json")
        data["rank_one"]["dim_n_lambda"] = 3
        with self.assertRaises(InvalidRootDatum):
            build_entry(parse_group_spec(data))


if __name__ == "__main__":
    unittest.main()
