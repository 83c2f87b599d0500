import unittest
import numpy as np

from pseudohopf.spaces import (PseudoHyperbolicSpace, AmbientPoint, TangentVector, SpaceException,
                               DegenerateSubspaceException, ReprojectionCounter, indefinite_gram_schmidt, geodesic)
from pseudohopf.geometry import covariant_derivative, constant_field_derivative, tangential_constant_field


class PseudoHyperbolicSpaceTests(unittest.TestCase):
    space = PseudoHyperbolicSpace(m=3, t=1)

    def test_construction_rules(self):
        with self.assertRaises(SpaceException):
            PseudoHyperbolicSpace(m=3, t=1, c=1.0)
        with self.assertRaises(SpaceException):
            PseudoHyperbolicSpace(m=3, t=4)
        self.assertEqual(self.space.eta.tolist(), [-1, -1, 1, 1])
        self.assertEqual(PseudoHyperbolicSpace(m=8, t=4, c=-4.0).space_id, "H^8_4(-4)")

    def test_random_points_are_members(self):
        rng = np.random.default_rng(5)
        for space in (self.space, PseudoHyperbolicSpace(m=15, t=7), PseudoHyperbolicSpace(m=8, t=4, c=-4.0)):
            points = np.array([space.random_point(rng) for _ in range(20)])
            self.assertTrue(space.is_member(points, tolerance=1e-12), space.space_id)

    def test_closed_timelike_geodesic(self):
        p = np.array([1.0, 0.0, 0.0, 0.0])
        v = np.array([0.0, 1.0, 0.0, 0.0])
        np.testing.assert_allclose(self.space.geodesic_coords(p, v, 2.0 * np.pi), p, atol=1e-12)
        np.testing.assert_allclose(self.space.geodesic_coords(p, v, np.pi / 2.0), v, atol=1e-12)

    def test_geodesics_stay_on_the_quadric(self):
        rng = np.random.default_rng(6)
        p = self.space.random_point(rng)
        for _ in range(3):
            v = self.space.random_tangent(rng, p)
            points = self.space.geodesic_coords(p, v, np.linspace(-1.0, 1.0, 7))
            self.assertLess(float(np.max(self.space.membership_defect(points))), 1e-10)

    def test_null_geodesic_is_a_line(self):
        p = np.array([1.0, 0.0, 0.0, 0.0])
        v = np.array([0.0, 1.0, 1.0, 0.0])
        np.testing.assert_allclose(self.space.geodesic_coords(p, v, 0.5), p + 0.5 * v)

    def test_non_tangent_velocity_is_rejected(self):
        p = np.array([1.0, 0.0, 0.0, 0.0])
        with self.assertRaises(SpaceException):
            self.space.geodesic_coords(p, np.array([1.0, 0.0, 0.0, 0.0]), 1.0)

    def test_reprojection_is_counted(self):
        counter = ReprojectionCounter()
        p = np.array([1.0, 0.0, 0.0, 0.0])
        self.assertIs(self.space.reproject(p, counter), p)
        drifted = self.space.reproject(1.001 * p, counter)
        self.assertEqual(counter.reset(), 1)
        self.assertLess(float(self.space.membership_defect(drifted)), 1e-12)

    def test_pinned_points_and_vectors(self):
        point = AmbientPoint(self.space, np.array([1.0, 0.0, 0.0, 0.0]))
        with self.assertRaises(SpaceException):
            AmbientPoint(self.space, np.array([2.0, 0.0, 0.0, 0.0]))
        with self.assertRaises(SpaceException):
            TangentVector(point, np.array([1.0, 0.0, 1.0, 0.0]))
        velocity = TangentVector(point, np.array([0.0, 0.0, 1.0, 0.0]))
        self.assertAlmostEqual(velocity.norm_sq, 1.0)
        moved = geodesic(point, velocity, 0.3)
        np.testing.assert_allclose(moved.coords, [np.cosh(0.3), 0.0, np.sinh(0.3), 0.0], atol=1e-12)


class GramSchmidtTests(unittest.TestCase):

    def test_standard_basis_keeps_signs(self):
        eta = np.array([-1.0, 1.0, 1.0])
        frame = indefinite_gram_schmidt(list(np.eye(3)), eta)
        np.testing.assert_allclose(frame.gram(eta), np.diag(frame.signs), atol=1e-14)
        self.assertEqual(frame.signature.index, 1)

    def test_random_vectors_are_orthonormalized(self):
        rng = np.random.default_rng(8)
        eta = np.array([-1.0, -1.0, 1.0, 1.0, 1.0])
        frame = indefinite_gram_schmidt(list(rng.normal(size=(4, 5))), eta)
        self.assertEqual(len(frame), 4)
        np.testing.assert_allclose(frame.gram(eta), np.diag(frame.signs), atol=1e-10)
        projector = frame.projector(eta)
        np.testing.assert_allclose(projector @ projector, projector, atol=1e-10)

    def test_dependent_vectors_are_dropped(self):
        eta = np.array([-1.0, 1.0, 1.0])
        vectors = [np.array([0.0, 1.0, 0.0]), np.array([0.0, 2.0, 0.0]), np.array([1.0, 0.0, 0.0])]
        self.assertEqual(len(indefinite_gram_schmidt(vectors, eta)), 2)

    def test_null_pair_is_resolved(self):
        eta = np.array([-1.0, 1.0])
        frame = indefinite_gram_schmidt([np.array([1.0, 1.0]), np.array([1.0, -1.0])], eta)
        self.assertEqual(len(frame), 2)
        np.testing.assert_allclose(frame.gram(eta), np.diag(frame.signs), atol=1e-12)

    def test_degenerate_subspace(self):
        with self.assertRaises(DegenerateSubspaceException):
            indefinite_gram_schmidt([np.array([1.0, 1.0, 0.0])], np.array([-1.0, 1.0, 1.0]))

    def test_max_vectors(self):
        eta = np.ones(4)
        self.assertEqual(len(indefinite_gram_schmidt(list(np.eye(4)), eta, max_vectors=2)), 2)


class ConnectionTests(unittest.TestCase):

    def test_constant_field_closed_form(self):
        rng = np.random.default_rng(9)
        space = PseudoHyperbolicSpace(m=4, t=2)
        p = space.random_point(rng)
        e = space.random_tangent(rng, p)
        constant = rng.normal(size=space.ambient_dim)
        numeric = covariant_derivative(space, tangential_constant_field(space, constant), p, e)
        np.testing.assert_allclose(numeric, constant_field_derivative(space, constant, p, e), atol=1e-6)
