from __future__ import annotations

import numpy as np

from typing import Sequence

from .connection import richardson_derivative
from .curvature import CurvatureValue, base_curvature_model, fibre_curvature_model
from .point_geometry import PointGeometry
from .sampling import PointSample, ONEILL_STREAM, make_trackers, build_report, scaled

from ..utilities import Tolerances, VerificationReport, get_logger
from ..utilities.constants import FD_OUTER_STEP

logger = get_logger(__name__)

_SYMMETRY_VECTORS = 3
_SYMMETRY_SAMPLES = 3


def _model_geometry(geometry: PointGeometry) -> PointGeometry:
    submersion = geometry.submersion
    if submersion.is_composite:
        return PointGeometry(submersion.outer, geometry.p, geometry.step)
    return geometry


def _nabla_a(geometry: PointGeometry, direction: np.ndarray, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """
    (nabla_D A)_X Y = nabla_D (A_X~ Y~) - A_{nabla_D X~} Y - A_X nabla_D Y~ for the projected extensions
    q -> P_q X, a nested finite difference with the outer step FD_OUTER_STEP.
    """
    submersion = geometry.submersion
    total = submersion.total
    p = geometry.p

    def extended(vector):
        return lambda q: submersion.tangent_projector(q) @ vector

    def a_along(s: float) -> np.ndarray:
        q = total.geodesic_coords(p, direction, s, check=False)
        local = PointGeometry(submersion, total.reproject(q), geometry.step)
        return local.A(extended(x)(q), extended(y)(q))

    def derivative_of(field):
        ambient = richardson_derivative(lambda s: field(total.geodesic_coords(p, direction, s, check=False)),
                                        FD_OUTER_STEP)
        return geometry.tangent @ ambient

    nabla_a = geometry.tangent @ richardson_derivative(a_along, FD_OUTER_STEP)
    return nabla_a - geometry.A(derivative_of(extended(x)), y) - geometry.A(x, derivative_of(extended(y)))


def oneill_residuals(samples: Sequence[PointSample], tolerances: Tolerances,
                     expensive: bool = False) -> VerificationReport:
    """
    Residuals of O'Neill's curvature equations at the sampled points.

    R is the curvature of the total space, R' is solved from the horizontal equation and compared to an
    independent base model, R^ is the constant curvature of the fibre model.
    """
    submersion = samples[0].geometry.submersion
    identity_ids = ["oneill_a", "oneill_d", "oneill_e", "oneill_corollary_a", "oneill_corollary_b",
                    "curvature_symmetries"]
    if expensive and not submersion.is_composite:
        identity_ids += ["oneill_b", "oneill_c"]
    trackers = make_trackers(identity_ids)

    for sample in samples:
        geometry, rng = sample.geometry, sample.rng(ONEILL_STREAM)
        g, a = geometry.g, geometry.A
        base_model = base_curvature_model(geometry, _model_geometry(geometry))
        fibre_model = fibre_curvature_model(geometry)
        x, y, z, w = (geometry.random_horizontal(rng) for _ in range(4))
        u, v, u2, v2 = (geometry.random_vertical(rng) for _ in range(4))

        predicted = (base_model(x, y, z, w) - 2.0 * g(a(x, y), a(z, w)) + g(a(y, z), a(x, w))
                     - g(a(x, z), a(y, w)))
        trackers["oneill_a"].add(scaled(geometry.total_curvature(x, y, z, w) - predicted, x, y, z, w))
        trackers["oneill_d"].add(scaled(geometry.total_curvature(u, v, u2, v2) - fibre_model(u, v, u2, v2),
                                        u, v, u2, v2))
        trackers["oneill_e"].add(scaled(geometry.total_curvature(u, v, u2, x), u, v, u2, x))
        trackers["oneill_corollary_a"].add(scaled(
            geometry.total_curvature(x, y, x, y) - base_model(x, y, x, y) + 3.0 * g(a(x, y), a(x, y)), x, y, x, y))
        trackers["oneill_corollary_b"].add(scaled(
            geometry.total_curvature(x, u, x, u) - g(a(x, u), a(x, u)), x, u, x, u))

        if sample.index < _SYMMETRY_SAMPLES:
            vectors = [geometry.random_horizontal(rng) for _ in range(_SYMMETRY_VECTORS)]
            solved = CurvatureValue.evaluate(geometry.base_curvature, vectors)
            trackers["curvature_symmetries"].add(solved.antisymmetry_residual())
            trackers["curvature_symmetries"].add(solved.bianchi_residual())

        if "oneill_b" in trackers:
            nabla_z = _nabla_a(geometry, z, x, y)
            trackers["oneill_b"].add(scaled(geometry.total_curvature(x, y, z, u) - g(nabla_z, u), x, y, z, u))
            nabla_u = _nabla_a(geometry, u, x, y)
            trackers["oneill_c"].add(scaled(
                geometry.total_curvature(x, u, y, v) - g(nabla_u, v) - g(a(x, u), a(y, v)), x, u, y, v))

    not_applicable = {}
    if submersion.is_composite:
        not_applicable = {"oneill_b": "nested derivatives are not evaluated for composite fibrations",
                          "oneill_c": "nested derivatives are not evaluated for composite fibrations"}
    elif not expensive:
        not_applicable = {"oneill_b": "requires the expensive flag", "oneill_c": "requires the expensive flag"}
    return build_report(submersion.spec.label, samples[0].seed, trackers, tolerances, not_applicable)
