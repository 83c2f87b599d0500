import unittest
import numpy as np

from pseudohopf.fibrations import FibrationId, FibrationException, get_fibration
from pseudohopf.geometry import (PointGeometry, GeometryException, jacobi_operator, predicted_eigenvalues,
                                 special_basis, expected_fibre_index, clifford_signs, clifford_matrices,
                                 basic_extension, fibre_tangent_field, BaseCurve, horizontal_lift_curve,
                                 distinguished_vertical)
from pseudohopf.geometry.clifford_structure import expected_clifford_signs
from pseudohopf.utilities.constants import MIN_CAUSAL_RATIO

_SPECTRUM_TOLERANCE = 1e-4


def _geometry(fibration_id: FibrationId, seed: int, m=None, t=None) -> PointGeometry:
    submersion = get_fibration(fibration_id, m, t)
    return PointGeometry(submersion, submersion.random_point(np.random.default_rng(seed)))


class SplittingTests(unittest.TestCase):

    def test_frames_match_the_fibration(self):
        for fibration_id in (FibrationId.pi4, FibrationId.pi8, FibrationId.pi_B):
            geometry = _geometry(fibration_id, 1, m=1)
            spec = geometry.submersion.spec
            self.assertEqual(geometry.base_dim, spec.base.dim)
            self.assertEqual(geometry.fibre_dim, spec.fibre.dim)
            self.assertEqual(int(np.sum(geometry.horizontal_frame.signs < 0)), spec.base.index)
            np.testing.assert_allclose(geometry.vertical @ geometry.vertical, geometry.vertical, atol=1e-10)

    def test_expected_fibre_index(self):
        for fibration_id in FibrationId.all():
            submersion = get_fibration(fibration_id, 1, 0)
            self.assertEqual(expected_fibre_index(submersion), submersion.fibre_index, fibration_id)

    def test_off_quadric_points_are_rejected(self):
        submersion = get_fibration(FibrationId.pi4)
        with self.assertRaises(FibrationException):
            PointGeometry(submersion, 2.0 * submersion.random_point(np.random.default_rng(0)))


class TensorTests(unittest.TestCase):
    rng = np.random.default_rng(21)

    def test_a_is_alternating_and_vertical(self):
        geometry = _geometry(FibrationId.pi9, 2)
        x, y = geometry.random_horizontal(self.rng), geometry.random_horizontal(self.rng)
        self.assertLess(np.linalg.norm(geometry.A(x, x)), 1e-5)
        np.testing.assert_allclose(geometry.A(x, y), -geometry.A(y, x), atol=1e-5)
        np.testing.assert_allclose(geometry.h(geometry.A(x, y)), 0.0, atol=1e-5)

    def test_fibres_are_totally_geodesic(self):
        geometry = _geometry(FibrationId.pi_H, 3, m=1, t=1)
        u, v = geometry.random_vertical(self.rng), geometry.random_vertical(self.rng)
        self.assertLess(np.linalg.norm(geometry.T(u, v)), 1e-5)

    def test_base_curvature_of_an_explicit_target(self):
        geometry = _geometry(FibrationId.pi4, 4)
        g = geometry.g
        x, y = geometry.random_horizontal(self.rng), geometry.random_horizontal(self.rng)
        expected = -4.0 * (g(x, x) * g(y, y) - g(x, y) ** 2)
        self.assertAlmostEqual(geometry.base_curvature(x, y, x, y), expected,
                               delta=1e-5 * max(1.0, abs(expected)))


class JacobiOperatorTests(unittest.TestCase):
    rng = np.random.default_rng(22)

    def _assert_spectrum(self, geometry: PointGeometry):
        n, r = geometry.base_dim, geometry.fibre_dim
        for sign in geometry.causal_signs(geometry.horizontal_frame):
            x = geometry.unit_horizontal(self.rng, sign, MIN_CAUSAL_RATIO)
            operator = jacobi_operator(geometry, x)
            eigenvalues = operator.eigenvalues()
            self.assertLess(float(np.max(np.abs(eigenvalues.imag))), _SPECTRUM_TOLERANCE)
            np.testing.assert_allclose(np.sort(eigenvalues.real), predicted_eigenvalues(geometry.c, sign, n, r),
                                       atol=_SPECTRUM_TOLERANCE)
            self.assertLess(operator.symmetry_defect(), _SPECTRUM_TOLERANCE)

    def test_constant_curvature_base(self):
        self._assert_spectrum(_geometry(FibrationId.pi1, 5))
        self._assert_spectrum(_geometry(FibrationId.pi9, 6))

    def test_two_eigenvalues_with_ratio_four(self):
        geometry = _geometry(FibrationId.pi_C, 7, m=2, t=1)
        self._assert_spectrum(geometry)
        x = geometry.unit_horizontal(self.rng, 1, MIN_CAUSAL_RATIO)
        values = np.sort(jacobi_operator(geometry, x).eigenvalues().real)
        self.assertAlmostEqual(values[0] / values[-1], 4.0, delta=1e-3)

    def test_null_vectors_are_rejected(self):
        geometry = _geometry(FibrationId.pi7, 8)
        frame = geometry.horizontal_frame
        with self.assertRaises(GeometryException):
            jacobi_operator(geometry, frame.of_sign(-1)[0] + frame.of_sign(1)[0])


class CliffordStructureTests(unittest.TestCase):

    def test_signs_follow_the_fibre_signature(self):
        geometry = _geometry(FibrationId.pi9, 9)
        self.assertEqual(sorted(clifford_signs(geometry)), expected_clifford_signs(7, 3, -1.0))

    def test_matrices_anticommute(self):
        geometry = _geometry(FibrationId.pi_B, 10, m=1)
        matrices = clifford_matrices(geometry)
        epsilons = clifford_signs(geometry)
        identity = np.eye(geometry.base_dim)
        for s, first in enumerate(matrices):
            np.testing.assert_allclose(first @ first, -epsilons[s] * identity, atol=1e-5)
            for second in matrices[s + 1:]:
                np.testing.assert_allclose(first @ second + second @ first, 0.0, atol=1e-5)


class SpecialBasisTests(unittest.TestCase):
    rng = np.random.default_rng(23)

    def test_index_formula(self):
        for fibration_id, m, t in ((FibrationId.pi9, None, None), (FibrationId.pi_H, 2, 1),
                                   (FibrationId.pi_A, 2, None)):
            geometry = _geometry(fibration_id, 11, m=m, t=t)
            sign = geometry.causal_signs(geometry.horizontal_frame)[0]
            basis = special_basis(geometry, geometry.unit_horizontal(self.rng, sign, MIN_CAUSAL_RATIO))
            frame = basis.as_frame()
            self.assertEqual(len(frame), geometry.base_dim, fibration_id)
            np.testing.assert_allclose(frame.gram(geometry.eta), np.diag(frame.signs), atol=1e-5)
            self.assertEqual(basis.predicted_index(), geometry.submersion.base_index, fibration_id)
            self.assertEqual(basis.k, geometry.base_dim // (geometry.fibre_dim + 1))

    def test_split_fibres_have_a_timelike_distinguished_vector(self):
        for fibration_id, m in ((FibrationId.pi_B, 1), (FibrationId.pi8, None)):
            geometry = _geometry(fibration_id, 12, m=m)
            self.assertEqual(int(np.sum(geometry.vertical_frame.signs < 0)), 1, fibration_id)
            for sign in geometry.causal_signs(geometry.horizontal_frame):
                x = geometry.unit_horizontal(self.rng, sign, MIN_CAUSAL_RATIO)
                v = distinguished_vertical(geometry, x)
                self.assertAlmostEqual(geometry.g(v, v), -1.0, places=4, msg=f"{fibration_id} {sign}")


class FieldTests(unittest.TestCase):
    rng = np.random.default_rng(24)

    def test_basic_extension_keeps_its_pushforward(self):
        submersion = get_fibration(FibrationId.pi_H, 1, 0)
        geometry = PointGeometry(submersion, submersion.random_point(self.rng))
        p, x = geometry.p, geometry.random_horizontal(self.rng)
        field = basic_extension(submersion, p, x)
        v = geometry.random_vertical(self.rng)
        q = submersion.fibre_point(p, v / np.sqrt(abs(geometry.g(v, v))), 0.4)
        moved = field(q)
        np.testing.assert_allclose(submersion.differential(q) @ moved, submersion.differential(p) @ x, atol=1e-9)
        np.testing.assert_allclose(submersion.vertical_projector(q) @ moved, 0.0, atol=1e-9)

    def test_fibre_tangent_field_is_vertical(self):
        submersion = get_fibration(FibrationId.pi7)
        p = submersion.random_point(self.rng)
        field = fibre_tangent_field(submersion, submersion.random_vertical(self.rng, p))
        value = field(p)
        np.testing.assert_allclose(submersion.vertical_projector(p) @ value, value, atol=1e-10)


class HorizontalLiftTests(unittest.TestCase):

    def test_lift_of_a_geodesic_stays_horizontal(self):
        rng = np.random.default_rng(25)
        submersion = get_fibration(FibrationId.pi_C, 1, 0)
        geometry = PointGeometry(submersion, submersion.random_point(rng))
        x = 0.5 * geometry.unit_horizontal(rng, 1, MIN_CAUSAL_RATIO)
        curve = BaseCurve.geodesic(submersion.total, geometry.p, x)
        lifted = horizontal_lift_curve(submersion, curve, geometry.p, steps=50)
        end = lifted.end_point
        self.assertTrue(submersion.total.is_member(end, tolerance=1e-8))
        np.testing.assert_allclose(submersion.evaluate(end), submersion.evaluate(curve.shadow(curve.end)),
                                   atol=1e-7)
