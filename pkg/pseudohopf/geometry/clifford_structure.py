from __future__ import annotations

import numpy as np

from typing import List, Sequence

from .curvature import clifford_curvature
from .point_geometry import PointGeometry
from .sampling import PointSample, CLIFFORD_STREAM, make_trackers, build_report, scaled

from ..utilities import Tolerances, VerificationReport

CLIFFORD_IDENTITIES = ("clifford_anticommutation", "clifford_skew", "clifford_curvature", "clifford_signs")


def clifford_matrices(geometry: PointGeometry) -> np.ndarray:
    """J_s X = A_X v_s as matrices in the horizontal frame, one per vertical frame vector."""
    frame = geometry.horizontal_frame
    columns = np.array([geometry.a_on_vertical(e) for e in frame.vectors])  # (b, N, r): A_{E_b} v_s
    coefficients = frame.signs[None, :, None] * np.einsum("an,bns->sab", frame.vectors * geometry.eta, columns)
    return coefficients


def clifford_signs(geometry: PointGeometry) -> List[int]:
    """eps_s = c g(v_s, v_s)."""
    return [int(round(geometry.c * sign)) for sign in geometry.vertical_frame.signs]


def expected_clifford_signs(r: int, r_prime: int, c: float) -> List[int]:
    """Timelike vertical members give eps = -c, spacelike ones eps = c."""
    return sorted([int(-c)] * r_prime + [int(c)] * (r - r_prime))


def clifford_structure_check(samples: Sequence[PointSample], tolerances: Tolerances) -> VerificationReport:
    """
    The Cliff(r)-structure of the base: anticommuting skew-adjoint J_s whose Clifford curvature formula
    (lambda_0 = -1, lambda_s = -4) reproduces the solved base curvature.
    """
    submersion = samples[0].geometry.submersion
    label = submersion.spec.label
    if submersion.is_composite:
        reason = "the total space of a composite fibration is not pseudo-hyperbolic"
        return build_report(label, samples[0].seed, {}, tolerances,
                            {identity_id: reason for identity_id in CLIFFORD_IDENTITIES})

    trackers = make_trackers(CLIFFORD_IDENTITIES)
    fibre = submersion.spec.fibre
    expected = expected_clifford_signs(fibre.dim, fibre.index, submersion.curvature)
    trackers["clifford_signs"].details["expected"] = expected

    for sample in samples:
        geometry, rng = sample.geometry, sample.rng(CLIFFORD_STREAM)
        g = geometry.g
        epsilons = clifford_signs(geometry)
        matrices = clifford_matrices(geometry)
        identity = np.eye(geometry.base_dim)
        for s, first in enumerate(matrices):
            for t, second in enumerate(matrices):
                anticommutator = first @ second + second @ first
                if s == t:
                    anticommutator = anticommutator + 2.0 * epsilons[s] * identity
                trackers["clifford_anticommutation"].add(float(np.max(np.abs(anticommutator))))

        x, y, z, w = (geometry.random_horizontal(rng) for _ in range(4))
        images_x, images_y = geometry.a_on_vertical(x), geometry.a_on_vertical(y)
        for s in range(geometry.fibre_dim):
            trackers["clifford_skew"].add(scaled(g(images_x[:, s], y) + g(x, images_y[:, s]), x, y))
        trackers["clifford_curvature"].add(scaled(
            clifford_curvature(geometry, x, y, z, w) - geometry.base_curvature(x, y, z, w), x, y, z, w))
        trackers["clifford_signs"].add(0.0 if sorted(epsilons) == expected else 1.0)

    return build_report(label, samples[0].seed, trackers, tolerances)
