from __future__ import annotations

import numpy as np

from typing import Sequence

from .connection import covariant_derivative
from .field_evaluator import basic_extension, fibre_tangent_field
from .sampling import PointSample, TENSOR_STREAM, make_trackers, build_report, scaled

from ..utilities import Tolerances, VerificationReport
from ..utilities.constants import MIN_CAUSAL_RATIO

GENERAL_IDENTITIES = ("a_alternating", "a_skew", "a_basic_extension", "t_vanishes")
QUADRIC_IDENTITIES = ("a_injective", "axaxv", "a_reciprocity", "a_vertical_isometry", "ranjan")


def a_tensor_checks(samples: Sequence[PointSample], tolerances: Tolerances) -> VerificationReport:
    """
    Algebraic identities of the O'Neill tensors at every sampled point.

    Alternation, skew-symmetry, the basic-extension cross-check and T = 0 hold for every fibration. The
    identities that rely on a constant-curvature total space (A_X A_X V = -c g(X,X) V and its consequences)
    are reported as not applicable for composite fibrations.
    """
    submersion = samples[0].geometry.submersion
    composite = submersion.is_composite
    identity_ids = GENERAL_IDENTITIES + (() if composite else QUADRIC_IDENTITIES)
    trackers = make_trackers(identity_ids)
    injectivity_floor = tolerances["a_injective"]
    min_singular_value = np.inf

    for sample in samples:
        geometry, rng = sample.geometry, sample.rng(TENSOR_STREAM)
        g, c = geometry.g, geometry.c
        x, y = geometry.random_horizontal(rng), geometry.random_horizontal(rng)
        e, f, k = geometry.random_tangent(rng), geometry.random_tangent(rng), geometry.random_tangent(rng)
        u, w = geometry.random_vertical(rng), geometry.random_vertical(rng)

        trackers["a_alternating"].add(scaled(np.linalg.norm(geometry.A(x, y) + geometry.A(y, x)), x, y))
        trackers["a_skew"].add(scaled(g(geometry.A(e, f), k) + g(f, geometry.A(e, k)), e, f, k))
        trackers["t_vanishes"].add(scaled(np.linalg.norm(geometry.T(u, e)), u, e))
        trackers["t_vanishes"].add(scaled(np.linalg.norm(
            geometry.h(covariant_derivative(submersion.total, fibre_tangent_field(submersion, w), geometry.p, u))),
            u, w))

        extension = basic_extension(submersion, geometry.p, x)
        derivative = geometry.h(covariant_derivative(submersion.total, extension, geometry.p, u))
        trackers["a_basic_extension"].add(scaled(np.linalg.norm(geometry.A(x, u) - derivative), x, u))

        if composite:
            continue
        for sign in geometry.causal_signs(geometry.horizontal_frame):
            unit = geometry.unit_horizontal(rng, sign, MIN_CAUSAL_RATIO)
            singular_values = np.linalg.svd(geometry.a_on_vertical(unit), compute_uv=False)
            min_singular_value = min(min_singular_value, float(np.min(singular_values)))
            trackers["a_injective"].add(0.0 if np.min(singular_values) >= injectivity_floor else 1.0)

        a_x_v = geometry.A(x, u)
        trackers["axaxv"].add(scaled(np.linalg.norm(geometry.A(x, a_x_v) + c * g(x, x) * u), x, x, u))
        trackers["a_reciprocity"].add(scaled(np.linalg.norm(geometry.A(a_x_v, u) + c * g(u, u) * x), x, u, u))
        images = geometry.a_on_vertical(x)
        frame = geometry.vertical_frame
        for i in range(len(frame)):
            for j in range(len(frame)):
                expected = c * g(x, x) * (frame.signs[i] if i == j else 0.0)
                trackers["a_vertical_isometry"].add(scaled(g(images[:, i], images[:, j]) - expected, x, x))
        anticommutator = geometry.A(geometry.A(y, w), u) + geometry.A(geometry.A(y, u), w)
        trackers["ranjan"].add(scaled(g(anticommutator, x) + 2.0 * c * g(u, w) * g(y, x), u, w, x, y))

    if "a_injective" in trackers:
        trackers["a_injective"].details["min_singular_value"] = min_singular_value
        trackers["a_injective"].details["floor"] = injectivity_floor
    not_applicable = {identity_id: "total space of a composite fibration is not pseudo-hyperbolic"
                      for identity_id in QUADRIC_IDENTITIES} if composite else {}
    return build_report(submersion.spec.label, samples[0].seed, trackers, tolerances, not_applicable)
