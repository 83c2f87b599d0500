import numpy as np

from typing import List

from ..geometry import covariant_derivative, constant_field_derivative, tangential_constant_field
from ..geometry.connection import richardson_derivative
from ..geometry.sampling import make_trackers, build_report
from ..spaces import PseudoHyperbolicSpace, ReprojectionCounter, indefinite_gram_schmidt
from ..utilities import Tolerances, VerificationReport, sample_rng
from ..utilities.constants import TOTAL_CURVATURE, BASE_CURVATURE

SPACE_IDENTITIES = ("geodesic_membership", "closed_timelike_geodesic", "gram_schmidt_orthonormality",
                    "gram_schmidt_idempotence", "covariant_derivative_closed_form", "metric_compatibility")

_GEODESIC_TIMES = np.linspace(-1.0, 1.0, 5)


def audited_spaces() -> List[PseudoHyperbolicSpace]:
    """Total spaces and targets of the explicit maps."""
    return [PseudoHyperbolicSpace(m=3, t=1, c=TOTAL_CURVATURE),
            PseudoHyperbolicSpace(m=7, t=3, c=TOTAL_CURVATURE),
            PseudoHyperbolicSpace(m=15, t=7, c=TOTAL_CURVATURE),
            PseudoHyperbolicSpace(m=8, t=4, c=BASE_CURVATURE)]


def _tangent_frame(space: PseudoHyperbolicSpace, p: np.ndarray):
    return indefinite_gram_schmidt(list(space.tangent_projector(p).T), space.eta, max_vectors=space.m)


def space_checks(tolerances: Tolerances, seed: int, samples: int) -> VerificationReport:
    """
    Geodesics stay on their quadric and close up along timelike directions, the indefinite Gram-Schmidt
    process is orthonormal and idempotent, and the finite-difference connection reproduces its closed form on
    tangential parts of constant fields and is metric.
    """
    trackers = make_trackers(SPACE_IDENTITIES)
    counter = ReprojectionCounter()
    for space_index, space in enumerate(audited_spaces()):
        for index in range(samples):
            rng = sample_rng(seed, 1, space_index, index)
            p = space.reproject(space.random_point(rng), counter)
            v = space.random_tangent(rng, p)
            for point in space.geodesic_coords(p, v, _GEODESIC_TIMES):
                trackers["geodesic_membership"].add(space.membership_defect(point) / max(1.0, float(point @ point)))

            timelike = _tangent_frame(space, p).of_sign(-1)
            coefficients = rng.normal(size=len(timelike))
            unit = coefficients @ timelike / np.linalg.norm(coefficients)
            closed = space.geodesic_coords(p, unit, 2.0 * np.pi)
            trackers["closed_timelike_geodesic"].add(np.linalg.norm(closed - p) / max(1.0, np.linalg.norm(p)))

            vectors = rng.normal(size=(min(space.ambient_dim - 1, 4), space.ambient_dim))
            frame = indefinite_gram_schmidt(vectors, space.eta)
            trackers["gram_schmidt_orthonormality"].add(
                np.max(np.abs(frame.gram(space.eta) - np.diag(frame.signs))))
            again = indefinite_gram_schmidt(frame.vectors, space.eta)
            trackers["gram_schmidt_idempotence"].add(np.max(np.abs(again.vectors - frame.vectors)))

            e = space.random_tangent(rng, p)
            first, second = rng.normal(size=(2, space.ambient_dim))
            field = tangential_constant_field(space, first)
            derivative = covariant_derivative(space, field, p, e)
            expected = constant_field_derivative(space, first, p, e)
            scale = max(1.0, float(np.linalg.norm(first) * np.linalg.norm(e)))
            trackers["covariant_derivative_closed_form"].add(np.linalg.norm(derivative - expected) / scale)

            other = tangential_constant_field(space, second)
            along = richardson_derivative(lambda s: np.array([space.inner(
                field(space.geodesic_coords(p, e, s, check=False)),
                other(space.geodesic_coords(p, e, s, check=False)))]))[0]
            compatible = (space.inner(derivative, other(p)) + space.inner(field(p),
                                                                          covariant_derivative(space, other, p, e)))
            trackers["metric_compatibility"].add(abs(along - compatible) / (scale * max(1.0, np.linalg.norm(second))))

    report = build_report("foundations", seed, trackers, tolerances)
    report.reprojections = counter.count
    return report
