import json
import unittest

from pseudohopf.algebra import AlgebraName
from pseudohopf.classify import (admissible, fibre_parallelizability_filter, derive_classified_rows, excluded_rows,
                                 family_invariants, lookup, entry_for_spec, admissibility_defects, catalog,
                                 catalog_to_json, catalog_to_markdown, ExistenceStatus, FAMILIES, NONEXISTENT)
from pseudohopf.fibrations import FibrationId, get_fibration_spec, composite_spec, quotient_spec


class AdmissibilityTests(unittest.TestCase):

    def test_split_octonionic_row(self):
        instance = admissible(8, 4, 7, 3)
        self.assertTrue(instance.is_admissible)
        self.assertEqual(instance.solutions, [(1, 0, 1), (1, 1, 0)])
        self.assertEqual(instance.invariants, (8, 4, 7, 3))

    def test_inadmissible_rows(self):
        self.assertFalse(admissible(8, 5, 7, 3).is_admissible)
        self.assertFalse(admissible(9, 0, 7, 7).is_admissible)
        self.assertFalse(admissible(4, 2, 1, 2).is_admissible)

    def test_parallelizability_filter(self):
        self.assertEqual(fibre_parallelizability_filter(2), frozenset({3, 7}))
        self.assertEqual(fibre_parallelizability_filter(5), frozenset({3, 7}))
        self.assertEqual(fibre_parallelizability_filter(1), frozenset({1}))

    def test_derived_rows_are_the_families(self):
        derived = {row.invariants for row in derive_classified_rows(32)}
        self.assertEqual(derived, family_invariants(32))

    def test_excluded_rows_are_cayley_planes(self):
        rows = excluded_rows(32)
        self.assertGreater(len(rows), 0)
        self.assertTrue(all(row.r == 7 and row.n != 8 for row in rows))
        self.assertIn((16, 0, 7, 7), [row.invariants for row in rows])


class CatalogTests(unittest.TestCase):

    def test_lookup_order(self):
        labels = [match.label for match in lookup(15, 7)]
        self.assertEqual(labels, ["pi_C(m=7,t=3)", "pi_A(m=7)", "pi_H(m=3,t=1)", "pi_B(m=3)", "pi9", "pi6"])

    def test_lookup_single_and_empty(self):
        self.assertEqual([match.label for match in lookup(5, 2)], ["pi_A(m=2)"])
        self.assertEqual(lookup(5, 0), [])
        self.assertEqual(lookup(5, 4), [])

    def test_lookup_reports_rows_that_do_not_occur(self):
        matches = lookup(31, 15)
        self.assertIn("no_h16_8", [match.label for match in matches])
        missing = [match for match in matches if match.spec is None]
        self.assertEqual(missing[0].entry.exists, ExistenceStatus.no)

    def test_entry_for_spec(self):
        self.assertEqual(entry_for_spec(get_fibration_spec(FibrationId.pi9)).key, "f")
        self.assertEqual(entry_for_spec(get_fibration_spec(FibrationId.pi6)).key, "g")
        self.assertEqual(entry_for_spec(quotient_spec(AlgebraName.C, 2, 1)).key, "a")
        self.assertEqual(entry_for_spec(quotient_spec(AlgebraName.B, 2)).key, "d")
        self.assertEqual(entry_for_spec(composite_spec(FibrationId.pi_CH, 1, 0)).key, "composite_a")
        self.assertEqual(entry_for_spec(composite_spec(FibrationId.pi_AB, 1)).key, "composite_c")

    def test_rows_satisfy_the_index_arithmetic(self):
        self.assertEqual(admissibility_defects(), [])

    def test_json_export(self):
        exported = json.loads(catalog_to_json())
        self.assertEqual(len(exported), len(catalog()))
        self.assertEqual(len(exported), 15)
        self.assertEqual(exported[5]["fibre"], {"r": 7, "r_prime": 3, "model": "H^7_3"})
        self.assertEqual(exported[-1]["exists"], "out_of_scope_proof")

    def test_markdown_export(self):
        markdown = catalog_to_markdown()
        for entry in FAMILIES + NONEXISTENT:
            self.assertIn(f"| {entry.key} |", markdown)
        self.assertIn("## Rows that do not occur", markdown)
