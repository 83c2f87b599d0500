import json
import unittest
import numpy as np

from pseudohopf.algebra import AlgebraName, STANDARD_CONVENTION, MIRROR_CONVENTION, multiply
from pseudohopf.fibrations import (FibrationId, FibrationException, HopfVariant, QuotientSubmersion,
                                   CompositeSubmersion, ComposedMap, get_fibration, get_fibration_spec,
                                   fibration_instances, fibration_submersions, split_phi2_fibration,
                                   SPLIT_PHI2_MAPS, compose, composite_spec, quotient_spec, pi9_coefficients,
                                   pi9_deviations, audit_split_octonion_convention,
                                   selected_split_octonion_convention, hopf_construction,
                                   export_fibration_catalog_json, numerical_rank)
from pseudohopf.validations import projector_defect, invariant_inner


class FibrationSpecTests(unittest.TestCase):

    def test_hopf_shapes(self):
        expected = {
            FibrationId.pi1: ((3, 3), (2, 2, 1, 1)),
            FibrationId.pi4: ((3, 1), (2, 0, 1, 1)),
            FibrationId.pi7: ((3, 1), (2, 1, 1, 0)),
            FibrationId.pi3: ((15, 15), (8, 8, 7, 7)),
            FibrationId.pi6: ((15, 7), (8, 0, 7, 7)),
            FibrationId.pi9: ((15, 7), (8, 4, 7, 3)),
        }
        for fibration_id, (total, invariants) in expected.items():
            spec = get_fibration_spec(fibration_id)
            self.assertEqual((spec.total_dim, spec.total_index), total, fibration_id)
            self.assertEqual(spec.invariants, invariants, fibration_id)
            self.assertEqual(spec.base.curvature, -4.0)

    def test_quotient_shapes(self):
        self.assertEqual(get_fibration_spec(FibrationId.pi_C, 2, 1).invariants, (4, 2, 1, 1))
        self.assertEqual(get_fibration_spec(FibrationId.pi_C, 2, 1).total.space_id, "H^5_3(-1)")
        self.assertEqual(get_fibration_spec(FibrationId.pi_A, 2).invariants, (4, 2, 1, 0))
        self.assertEqual(get_fibration_spec(FibrationId.pi_H, 1, 0).invariants, (4, 0, 3, 3))
        self.assertEqual(get_fibration_spec(FibrationId.pi_B, 1).invariants, (4, 2, 3, 1))
        self.assertEqual(get_fibration_spec(FibrationId.pi_B, 1).total_index, 3)

    def test_labels(self):
        self.assertEqual(get_fibration_spec(FibrationId.pi_C, 2, 1).label, "pi_C(m=2,t=1)")
        self.assertEqual(get_fibration_spec(FibrationId.pi_B, 2).label, "pi_B(m=2)")
        self.assertEqual(get_fibration_spec(FibrationId.pi9).label, "pi9")

    def test_composite_shapes(self):
        spec = composite_spec(FibrationId.pi_CH, 1, 0)
        self.assertTrue(spec.is_composite)
        self.assertEqual((spec.total_dim, spec.total_index), (6, 2))
        self.assertEqual(spec.invariants, (4, 0, 2, 2))
        self.assertEqual(composite_spec(FibrationId.pi_CB, 1).invariants, (4, 2, 2, 0))
        self.assertEqual(composite_spec(FibrationId.pi_AB, 1).invariants, (4, 2, 2, 1))

    def test_invalid_parameters(self):
        with self.assertRaises(FibrationException):
            get_fibration(FibrationId.pi_C, 1, 2)
        with self.assertRaises(FibrationException):
            get_fibration(FibrationId.pi_H, 0)

    def test_instances(self):
        self.assertEqual(fibration_instances(FibrationId.pi9), [(0, 0)])
        self.assertEqual(fibration_instances(FibrationId.pi_C, 2), [(2, 0), (2, 1), (2, 2)])
        self.assertEqual(fibration_instances(FibrationId.pi_B, 2), [(2, 0)])

    def test_catalog_export(self):
        exported = json.loads(export_fibration_catalog_json(m=1))
        self.assertEqual(len(exported), 19)
        self.assertEqual(exported[0]["label"], "pi_C(m=1,t=0)")


class Pi9PolynomialTests(unittest.TestCase):

    def test_coefficients_are_symmetric(self):
        coefficients = pi9_coefficients()
        self.assertEqual(coefficients.shape, (9, 16, 16))
        np.testing.assert_array_equal(coefficients, np.swapaxes(coefficients, 1, 2))

    def test_selected_convention_reproduces_polynomial(self):
        convention = selected_split_octonion_convention()
        self.assertIn(convention, (STANDARD_CONVENTION, MIRROR_CONVENTION))
        construction = hopf_construction(AlgebraName.Oprime, HopfVariant.phi1)
        rng = np.random.default_rng(4)
        points = np.array([construction.domain.random_point(rng) for _ in range(25)])
        self.assertLessEqual(float(np.max(pi9_deviations(construction, points))), 1e-12)

    def test_audit_is_deterministic(self):
        first = audit_split_octonion_convention(np.random.default_rng(1), samples=10)
        second = audit_split_octonion_convention(np.random.default_rng(2), samples=10)
        self.assertEqual(first[0], second[0])


class HopfSubmersionTests(unittest.TestCase):
    rng = np.random.default_rng(12)

    def test_images_lie_on_the_target(self):
        submersions = [get_fibration(fibration_id) for fibration_id in FibrationId.hopf_fibrations()]
        submersions += [split_phi2_fibration(fibration_id) for fibration_id in SPLIT_PHI2_MAPS]
        for submersion in submersions:
            points = np.array([submersion.random_point(self.rng) for _ in range(10)])
            defects = submersion.target.membership_defect(submersion.evaluate(points))
            self.assertLess(float(np.max(defects)), 1e-10, submersion.spec.label)

    def test_split_phi2_shapes(self):
        for fibration_id in SPLIT_PHI2_MAPS:
            submersion = split_phi2_fibration(fibration_id)
            spec = get_fibration_spec(fibration_id)
            self.assertEqual(submersion.spec.label, f"{fibration_id.name}_phi2")
            self.assertEqual(submersion.construction.variant, HopfVariant.phi2)
            self.assertEqual(submersion.spec.invariants, spec.invariants)
            self.assertEqual((submersion.spec.total_dim, submersion.spec.total_index),
                             (spec.total_dim, spec.total_index))
        with self.assertRaises(FibrationException):
            split_phi2_fibration(FibrationId.pi4)
        self.assertEqual([submersion.spec.label for submersion in fibration_submersions(FibrationId.pi8)],
                         ["pi8", "pi8_phi2"])

    def test_differential_rank(self):
        for fibration_id in (FibrationId.pi2, FibrationId.pi9):
            submersion = get_fibration(fibration_id)
            p = submersion.random_point(self.rng)
            tangent = submersion.tangent_projector(p)
            self.assertEqual(numerical_rank(submersion.differential(p) @ tangent, 1e-8), submersion.base_dim)

    def test_left_orbits_are_fibres(self):
        submersion = get_fibration(FibrationId.pi5)
        construction = submersion.construction
        p = submersion.random_point(self.rng)
        x, y = construction.split(p)
        u = self.rng.normal(size=4)
        u /= np.sqrt(np.sum(submersion.algebra.norm_signs * u * u))
        q = construction.join(multiply(submersion.algebra, u, x), multiply(submersion.algebra, u, y))
        self.assertTrue(submersion.same_fibre(p, q))
        np.testing.assert_allclose(submersion.evaluate(q), submersion.evaluate(p), atol=1e-10)

    def test_lift_inverts_pushforward(self):
        submersion = get_fibration(FibrationId.pi9)
        p = submersion.random_point(self.rng)
        x = submersion.random_horizontal(self.rng, p)
        pushed = submersion.pushforward(p, x)
        np.testing.assert_allclose(submersion.lift(p, pushed), x, atol=1e-8)

    def test_lift_rejects_normal_data(self):
        submersion = get_fibration(FibrationId.pi1)
        p = submersion.random_point(self.rng)
        with self.assertRaises(FibrationException):
            submersion.lift(p, submersion.evaluate(p))


class QuotientSubmersionTests(unittest.TestCase):
    rng = np.random.default_rng(13)

    def _unit(self, submersion: QuotientSubmersion) -> np.ndarray:
        u = np.zeros(submersion.algebra.dim)
        u[0] = 1.0
        for j in submersion.acting:
            u[j] = 0.3 * self.rng.normal()
        return u / np.sqrt(float(np.sum(submersion.algebra.norm_signs * u * u)))

    def test_invariant_is_constant_on_orbits(self):
        for algebra in (AlgebraName.C, AlgebraName.A, AlgebraName.H, AlgebraName.B):
            submersion = QuotientSubmersion(algebra, 2, 1)
            p = submersion.random_point(self.rng)
            q = submersion.right_multiply(p, self._unit(submersion))
            self.assertTrue(submersion.total.is_member(q, tolerance=1e-10), algebra)
            self.assertTrue(submersion.same_fibre(p, q), algebra)
            np.testing.assert_allclose(submersion.evaluate(q), submersion.evaluate(p), atol=1e-10)

    def test_quotient_points(self):
        submersion = QuotientSubmersion(AlgebraName.B, 1, 0)
        p = submersion.random_point(self.rng)
        point = submersion.quotient_point(p)
        q = submersion.right_multiply(p, self._unit(submersion))
        self.assertTrue(point.same_orbit(submersion.quotient_point(q)))
        self.assertFalse(point.same_orbit(submersion.quotient_point(submersion.random_point(self.rng))))

    def test_lift_rejects_vertical_data(self):
        submersion = QuotientSubmersion(AlgebraName.C, 1, 0)
        p = submersion.random_point(self.rng)
        x = submersion.random_horizontal(self.rng, p)
        np.testing.assert_allclose(submersion.lift(p, x), x, atol=1e-10)
        with self.assertRaises(FibrationException):
            submersion.lift(p, x + submersion.random_vertical(self.rng, p))

    def test_invariant_is_a_projector(self):
        for algebra in (AlgebraName.C, AlgebraName.H, AlgebraName.B):
            submersion = QuotientSubmersion(algebra, 2, 1)
            points = np.array([submersion.random_point(self.rng) for _ in range(5)])
            self.assertLess(float(np.max(np.abs(projector_defect(submersion, submersion.evaluate(points))))), 1e-10)

    def test_differential_is_an_isometry_on_horizontals(self):
        submersion = QuotientSubmersion(AlgebraName.H, 1, 1)
        p = submersion.random_point(self.rng)
        x, y = submersion.random_horizontal(self.rng, p), submersion.random_horizontal(self.rng, p)
        differential = submersion.differential(p)
        self.assertAlmostEqual(invariant_inner(submersion, differential @ x, differential @ y),
                               float(submersion.inner(x, y)), places=8)

    def test_vertical_signature(self):
        expected = {AlgebraName.C: 1, AlgebraName.A: 0, AlgebraName.H: 3, AlgebraName.B: 1}
        for algebra, index in expected.items():
            submersion = QuotientSubmersion(algebra, 1, 0)
            frame = submersion.vertical_space(submersion.random_point(self.rng))
            self.assertEqual(frame.signature.index, index, algebra)

    def test_transport_rejects_other_fibres(self):
        submersion = QuotientSubmersion(AlgebraName.C, 1, 0)
        p, q = submersion.random_point(self.rng), submersion.random_point(self.rng)
        x = submersion.random_horizontal(self.rng, p)
        with self.assertRaises(FibrationException):
            submersion.transport_horizontal(p, x, q)


class CompositeSubmersionTests(unittest.TestCase):
    rng = np.random.default_rng(14)

    def test_compose_reproduces_the_quotient(self):
        outer = composite_spec(FibrationId.pi_CH, 1, 0)
        inner = quotient_spec(AlgebraName.C, 3, 1)
        self.assertEqual(compose(outer, inner), quotient_spec(AlgebraName.H, 1, 0))
        self.assertEqual(compose(composite_spec(FibrationId.pi_AB, 1), quotient_spec(AlgebraName.A, 3)),
                         quotient_spec(AlgebraName.B, 1))

    def test_compose_rejects_mismatched_bases(self):
        with self.assertRaises(FibrationException):
            compose(composite_spec(FibrationId.pi_CH, 1, 0), quotient_spec(AlgebraName.C, 3, 0))
        with self.assertRaises(FibrationException):
            compose(quotient_spec(AlgebraName.H, 1, 0), quotient_spec(AlgebraName.C, 3, 1))

    def test_standalone_coordinates_round_trip(self):
        for fibration_id in FibrationId.composite_fibrations():
            submersion = CompositeSubmersion(fibration_id, 1, 0)
            standalone = submersion.standalone_inner()
            w = standalone.random_point(self.rng)
            z = submersion.from_standalone(w)
            self.assertTrue(submersion.total.is_member(z, tolerance=1e-10), fibration_id)
            np.testing.assert_allclose(submersion.to_standalone(z), w, atol=1e-12)

    def test_composed_map_is_constant_on_inner_orbits(self):
        for fibration_id in FibrationId.composite_fibrations():
            submersion = CompositeSubmersion(fibration_id, 1, 0)
            standalone = submersion.standalone_inner()
            composed = ComposedMap(submersion, standalone)
            w = standalone.random_point(self.rng)
            v = standalone.random_vertical(self.rng, w)
            v = v / np.sqrt(abs(float(standalone.inner(v, v))))
            moved = standalone.fibre_point(w, v, 0.7)
            np.testing.assert_allclose(composed.evaluate(moved), composed.evaluate(w), atol=1e-9,
                                       err_msg=str(fibration_id))

    def test_composite_vertical_signature(self):
        for fibration_id in FibrationId.composite_fibrations():
            submersion = CompositeSubmersion(fibration_id, 1, 0)
            frame = submersion.vertical_space(submersion.random_point(self.rng))
            self.assertEqual((len(frame), frame.signature.index),
                             (submersion.fibre_dim, submersion.fibre_index), fibration_id)
