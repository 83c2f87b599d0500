import unittest
import numpy as np

from pseudohopf.algebra import (AlgebraElement, AlgebraException, AlgebraName, REALS, COMPLEX, PARA_COMPLEX,
                                QUATERNIONS, PARA_QUATERNIONS, OCTONIONS, SPLIT_OCTONIONS, cayley_dickson_double,
                                get_algebra, get_available_algebras, multiply, conjugate, build_multiplication_table,
                                associator_witness, left_multiplication_matrix, right_multiplication_matrix,
                                MIRROR_CONVENTION)
from pseudohopf.algebra.cayley_dickson import norm_form


class AlgebraTagTests(unittest.TestCase):

    def test_norm_signatures(self):
        expected = {
            AlgebraName.C: [1, 1],
            AlgebraName.A: [1, -1],
            AlgebraName.H: [1, 1, 1, 1],
            AlgebraName.B: [1, 1, -1, -1],
            AlgebraName.O: [1] * 8,
            AlgebraName.Oprime: [1] * 4 + [-1] * 4,
        }
        for name, signs in expected.items():
            self.assertEqual(get_algebra(name).norm_signs.tolist(), signs, name)

    def test_division_and_associativity_flags(self):
        self.assertTrue(QUATERNIONS.is_division)
        self.assertFalse(PARA_QUATERNIONS.is_division)
        self.assertTrue(PARA_QUATERNIONS.is_associative)
        self.assertFalse(SPLIT_OCTONIONS.is_associative)

    def test_doubling_past_dimension_eight_fails(self):
        with self.assertRaises(AlgebraException):
            cayley_dickson_double(OCTONIONS, -1)

    def test_doubling_sign_must_be_unit(self):
        with self.assertRaises(AlgebraException):
            cayley_dickson_double(REALS, 2)

    def test_unknown_convention(self):
        with self.assertRaises(AlgebraException):
            QUATERNIONS.with_convention("sideways")


class ProductTests(unittest.TestCase):
    rng = np.random.default_rng(11)

    def test_quaternion_units(self):
        i, j, k = (AlgebraElement.basis(QUATERNIONS, index) for index in (1, 2, 3))
        self.assertTrue((i * j).equals(k))
        self.assertTrue((j * i).equals(-k))
        self.assertTrue((j * j).equals(-AlgebraElement.unit(QUATERNIONS)))

    def test_element_arithmetic(self):
        one, i = AlgebraElement.unit(QUATERNIONS), AlgebraElement.basis(QUATERNIONS, 1)
        z = one + i
        self.assertTrue(z.conj().equals(one - i))
        self.assertEqual(z.norm_form(), 2.0)
        self.assertTrue((2 * one).equals(one + one))
        self.assertTrue((z * 3).equals(3 * one + 3 * i))

    def test_para_complex_unit_squares_to_one(self):
        j = AlgebraElement.basis(PARA_COMPLEX, 1)
        self.assertTrue((j * j).equals(AlgebraElement.unit(PARA_COMPLEX)))

    def test_composition_property(self):
        for tag in get_available_algebras():
            x, y = self.rng.normal(size=(2, 20, tag.dim))
            product = multiply(tag, x, y)
            np.testing.assert_allclose(norm_form(tag, product), norm_form(tag, x) * norm_form(tag, y),
                                       atol=1e-10, err_msg=str(tag))

    def test_conjugation_is_anti_automorphism(self):
        for tag in get_available_algebras():
            x, y = self.rng.normal(size=(2, 10, tag.dim))
            np.testing.assert_allclose(conjugate(multiply(tag, x, y)),
                                       multiply(tag, conjugate(y), conjugate(x)), atol=1e-12, err_msg=str(tag))

    def test_alternativity(self):
        for tag in (OCTONIONS, SPLIT_OCTONIONS):
            x, y = self.rng.normal(size=(2, 10, tag.dim))
            np.testing.assert_allclose(multiply(tag, multiply(tag, x, x), y), multiply(tag, x, multiply(tag, x, y)),
                                       atol=1e-10)
            np.testing.assert_allclose(multiply(tag, multiply(tag, y, x), x), multiply(tag, y, multiply(tag, x, x)),
                                       atol=1e-10)

    def test_exact_integer_products(self):
        x = np.arange(1, 9)
        y = np.arange(8, 0, -1)
        product = multiply(OCTONIONS, x, y)
        self.assertEqual(product.dtype.kind, "i")
        self.assertEqual(int(norm_form(OCTONIONS, product)), int(norm_form(OCTONIONS, x) * norm_form(OCTONIONS, y)))

    def test_multiplication_matrices(self):
        u, x = self.rng.normal(size=(2, 4))
        np.testing.assert_allclose(left_multiplication_matrix(PARA_QUATERNIONS, u) @ x,
                                   multiply(PARA_QUATERNIONS, u, x), atol=1e-12)
        np.testing.assert_allclose(right_multiplication_matrix(PARA_QUATERNIONS, u) @ x,
                                   multiply(PARA_QUATERNIONS, x, u), atol=1e-12)

    def test_mixed_tags_are_rejected(self):
        with self.assertRaises(AlgebraException):
            AlgebraElement.unit(COMPLEX) * AlgebraElement.unit(PARA_COMPLEX)
        with self.assertRaises(AlgebraException):
            AlgebraElement(QUATERNIONS, np.zeros(3))

    def test_mirror_convention_changes_the_product(self):
        mirror = OCTONIONS.with_convention(MIRROR_CONVENTION)
        x, y = self.rng.normal(size=(2, 8))
        self.assertFalse(np.allclose(multiply(mirror, x, y), multiply(OCTONIONS, x, y)))


class MultiplicationTableTests(unittest.TestCase):

    def test_table_reproduces_products(self):
        rng = np.random.default_rng(3)
        for tag in get_available_algebras():
            table = build_multiplication_table(tag)
            x, y = rng.normal(size=(2, 5, tag.dim))
            np.testing.assert_allclose(table.multiply(x, y), multiply(tag, x, y), atol=1e-12, err_msg=str(tag))

    def test_quaternion_entries(self):
        table = build_multiplication_table(QUATERNIONS)
        self.assertEqual(table.product(1, 2), (3, 1))
        self.assertEqual(table.product(2, 1), (3, -1))
        self.assertEqual(table.product(3, 3), (0, -1))

    def test_table_serialization(self):
        table = build_multiplication_table(SPLIT_OCTONIONS).to_dict()
        self.assertEqual(table["algebra"], "Oprime")
        self.assertEqual(table["dim"], 8)
        self.assertEqual(table["metadata"]["norm_signature"], [4, 4])
        self.assertEqual(len(table["entries"]), 8)

    def test_associator_witness(self):
        for tag in (COMPLEX, PARA_COMPLEX, QUATERNIONS, PARA_QUATERNIONS):
            self.assertIsNone(associator_witness(tag), str(tag))
        for tag in (OCTONIONS, SPLIT_OCTONIONS):
            witness = associator_witness(tag)
            self.assertIsNotNone(witness, str(tag))
            self.assertTrue(all(index > 0 for index in witness))
