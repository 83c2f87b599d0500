from __future__ import annotations

import numpy as np

from typing import Sequence

from .geometry_exception import GeometryException
from .jacobi_operator import jacobi_operator, predicted_eigenvalues, predicted_spectrum
from .point_geometry import PointGeometry
from .sampling import PointSample, JACOBI_STREAM, make_trackers, build_report, scaled

from ..utilities import Tolerances, VerificationReport, get_logger
from ..utilities.constants import MIN_CAUSAL_RATIO

logger = get_logger(__name__)

SPECTRUM_IDENTITIES = ("jacobi_spectrum", "jacobi_diagonalizable")
TWO_EIGENVALUE_IDENTITIES = ("jacobi_ratio", "osserman_reciprocity", "osserman_kernel")


def _reciprocity_residual(geometry: PointGeometry, x: np.ndarray, rng: np.random.Generator):
    """
    For Y = aX + A_X V in the -4 eigenspace closure: X = bY + A_Y W with b = a g(X,X)/g(Y,Y) and
    W = -A_X Y / g(Y,Y). None when Y is too close to the null cone.
    """
    g = geometry.g
    a = float(rng.normal())
    y = a * x + geometry.A(x, geometry.random_vertical(rng))
    norm_y = g(y, y)
    if abs(norm_y) < MIN_CAUSAL_RATIO * float(y @ y):
        return None
    b = a * g(x, x) / norm_y
    w = -geometry.A(x, y) / norm_y
    return scaled(np.linalg.norm(x - b * y - geometry.A(y, w)), x, y)


def _kernel_residuals(geometry: PointGeometry, x: np.ndarray, rng: np.random.Generator):
    """
    Y in the complement of span{X, A_X v_i}: A_X Y = 0 and R'_Y X = R'(X,Y)Y = -eps_Y X, the latter read off
    the solved base curvature in the horizontal frame.
    """
    g = geometry.g
    images = geometry.a_on_vertical(x).T
    block = np.vstack([x[None, :], images])
    signs = np.array([geometry.g(row, row) for row in block])
    projector = (block.T / signs) @ (block * geometry.eta)
    y = geometry.random_horizontal(rng)
    y = y - projector @ y
    norm_y = g(y, y)
    if abs(norm_y) < MIN_CAUSAL_RATIO * float(y @ y):
        return None
    y = y / np.sqrt(abs(norm_y))
    epsilon_y = 1 if norm_y > 0 else -1
    frame = geometry.horizontal_frame
    jacobi_y = frame.combine(frame.signs * np.array([geometry.base_curvature(x, y, e, y) for e in frame.vectors]))
    return (scaled(np.linalg.norm(geometry.A(x, y)), x, y),
            scaled(np.linalg.norm(jacobi_y - geometry.c * epsilon_y * x), x, y, y))


def special_osserman_check(samples: Sequence[PointSample], tolerances: Tolerances) -> VerificationReport:
    """
    Jacobi operators of the base at unit horizontal X of every causal type.

    The spectrum must be {4c eps_X (x r), c eps_X (x n-1-r)} with a diagonalizable operator. Stability of the
    eigenspaces is checked through the reciprocity of the -4 eigenspace and the kernel identities.
    With n = r+1 the base has constant curvature and only the single-eigenvalue checks apply.
    """
    geometry = samples[0].geometry
    submersion = geometry.submersion
    label = submersion.spec.label
    if submersion.is_composite:
        reason = "base Jacobi operators are not evaluated for composite fibrations"
        return build_report(label, samples[0].seed, {}, tolerances,
                            {identity_id: reason for identity_id in SPECTRUM_IDENTITIES + TWO_EIGENVALUE_IDENTITIES})

    n, r = geometry.base_dim, geometry.fibre_dim
    constant_curvature = n == r + 1
    identity_ids = SPECTRUM_IDENTITIES + (() if constant_curvature else TWO_EIGENVALUE_IDENTITIES)
    trackers = make_trackers(identity_ids)
    ratios = []

    for sample in samples:
        geometry, rng = sample.geometry, sample.rng(JACOBI_STREAM)
        c = geometry.c
        for sign in geometry.causal_signs(geometry.horizontal_frame):
            x = geometry.unit_horizontal(rng, sign, MIN_CAUSAL_RATIO)
            try:
                operator = jacobi_operator(geometry, x)
            except GeometryException as e:
                logger.warning(f"{label}: Jacobi operator skipped at sample {sample.index}: {e}")
                continue
            eigenvalues = operator.eigenvalues()
            expected = predicted_eigenvalues(c, operator.epsilon, n, r)
            trackers["jacobi_spectrum"].add(float(np.max(np.abs(eigenvalues - expected))))

            identity = np.eye(operator.dim)
            product = identity.copy()
            for value, _ in predicted_spectrum(c, operator.epsilon, n, r):
                product = product @ (operator.matrix - value * identity)
            trackers["jacobi_diagonalizable"].add(float(np.max(np.abs(product))))

            if constant_curvature:
                continue
            lam = np.mean(eigenvalues.real[np.abs(eigenvalues.real - 4.0 * c * operator.epsilon) <
                                           np.abs(eigenvalues.real - c * operator.epsilon)])
            mu = np.mean(eigenvalues.real[np.abs(eigenvalues.real - 4.0 * c * operator.epsilon) >=
                                          np.abs(eigenvalues.real - c * operator.epsilon)])
            ratios.append(float(lam / mu))
            trackers["jacobi_ratio"].add(abs(lam / mu - 4.0))

            reciprocity = _reciprocity_residual(geometry, operator.base_vector, rng)
            if reciprocity is not None:
                trackers["osserman_reciprocity"].add(reciprocity)
            kernel = _kernel_residuals(geometry, operator.base_vector, rng)
            if kernel is not None:
                trackers["osserman_kernel"].add_all(kernel)

    trackers["jacobi_spectrum"].details["multiplicities"] = [r, n - 1 - r] if not constant_curvature else [r]
    if ratios:
        trackers["jacobi_ratio"].details["mean_ratio"] = float(np.mean(ratios))
    not_applicable = {}
    if constant_curvature:
        not_applicable = {identity_id: "n = r+1: the base has constant curvature -4, a single eigenvalue"
                          for identity_id in TWO_EIGENVALUE_IDENTITIES}
    return build_report(label, samples[0].seed, trackers, tolerances, not_applicable)
