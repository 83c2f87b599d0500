from __future__ import annotations

import numpy as np

from typing import Sequence

from ..algebra import multiply
from ..fibrations import (Submersion, HopfSubmersion, QuotientSubmersion, CompositeSubmersion, ComposedMap,
                          numerical_rank)
from ..geometry import basic_extension
from ..geometry.sampling import PointSample, FIBRATION_STREAM, make_trackers, build_report, scaled
from ..utilities import Tolerances, VerificationReport, sample_rng
from ..utilities.constants import RANK_THRESHOLD

FIBRATION_IDENTITIES = ("total_membership", "target_membership", "euler_identity", "differential_rank",
                        "submersion_isometry", "splitting_orthogonality", "vertical_signature", "fibre_geodesic",
                        "horizontal_lift", "metric_push_consistency")

_GEODESIC_POINTS = 5
_PUSH_POINTS = 3
_ORBIT_POINTS = 3


def _quotient_of(submersion: Submersion) -> QuotientSubmersion:
    """The quotient whose invariant z z* represents the base points."""
    return submersion.outer if isinstance(submersion, CompositeSubmersion) else submersion


def _invariant_blocks(quotient: QuotientSubmersion, flat: np.ndarray) -> np.ndarray:
    flat = np.asarray(flat, dtype=float)
    components = quotient.layout.components
    return flat.reshape(flat.shape[:-1] + (components, components, quotient.algebra.dim))


def projector_defect(quotient: QuotientSubmersion, flat: np.ndarray) -> np.ndarray:
    """Phi S Phi + Phi for Phi = z z* and S = diag(sigma); vanishes exactly when <z,z> = -1."""
    phi = _invariant_blocks(quotient, flat)
    sigma = quotient.layout.component_signs.astype(float)
    left = phi * sigma[:, None]
    products = np.sum(multiply(quotient.algebra, left[..., :, :, None, :], phi[..., None, :, :, :]), axis=-3)
    return (products + phi).reshape(np.shape(flat))


def invariant_inner(quotient: QuotientSubmersion, first: np.ndarray, second: np.ndarray) -> float:
    """
    -1/2 Re tr(A S B S) on differentials of the invariant. For horizontal X, Y at a point of the quadric it
    equals g(X, Y), which makes it the metric of the base.
    """
    a, b = _invariant_blocks(quotient, first), _invariant_blocks(quotient, second)
    sigma = quotient.layout.component_signs.astype(float)
    real_parts = multiply(quotient.algebra, a, np.swapaxes(b, 0, 1))[..., 0]
    return -0.5 * float(np.sum(real_parts * sigma[:, None] * sigma[None, :]))


def _base_inner(submersion: Submersion, first: np.ndarray, second: np.ndarray) -> float:
    if isinstance(submersion, HopfSubmersion):
        return float(submersion.target.inner(first, second))
    return invariant_inner(_quotient_of(submersion), first, second)


def _target_defects(submersion: Submersion, points: np.ndarray) -> np.ndarray:
    images = submersion.evaluate(points)
    if isinstance(submersion, HopfSubmersion):
        return submersion.target.membership_defect(images)
    return np.max(np.abs(projector_defect(_quotient_of(submersion), images)), axis=-1)


def _lift_residual(submersion: Submersion, geometry, rng: np.random.Generator) -> float:
    p = geometry.p
    if isinstance(submersion, HopfSubmersion):
        x = geometry.random_horizontal(rng)
        pushed = submersion.pushforward(p, x)
        lifted = submersion.lift(p, pushed)
        return scaled(max(np.linalg.norm(lifted - x), np.linalg.norm(submersion.pushforward(p, lifted) - pushed)), x)
    quotient = _quotient_of(submersion)
    x = geometry.random_horizontal(rng)
    q = quotient.fibre_point(p, quotient.random_vertical(rng, p), 0.5)
    lifted = quotient.lift(p, x, q)
    defect = max(np.linalg.norm(submersion.pushforward(q, lifted) - submersion.pushforward(p, x)),
                 np.linalg.norm(quotient.vertical_projector(q) @ lifted))
    return scaled(defect, x)


def _unit_vertical(geometry, rng: np.random.Generator) -> np.ndarray:
    v = geometry.random_vertical(rng)
    return v / np.sqrt(abs(geometry.g(v, v)))


def fibration_checks(samples: Sequence[PointSample], tolerances: Tolerances,
                     membership_samples: int) -> VerificationReport:
    """
    Pointwise checks of a submersion: the quadrics are respected, d pi has full rank and is an isometry on the
    horizontal space, fibres have the expected signature and are totally geodesic, lifts invert d pi and basic
    fields keep their Gram matrix along the fibre. Composites also reproduce the outer quotient on inner orbits.
    """
    submersion = samples[0].geometry.submersion
    seed = samples[0].seed
    identity_ids = FIBRATION_IDENTITIES + (("orbit_reproduction",) if submersion.is_composite else ())
    trackers = make_trackers(identity_ids)

    rng = sample_rng(seed, *samples[0].stream, FIBRATION_STREAM)
    batch = np.array([submersion.random_point(rng) for _ in range(membership_samples)])
    trackers["total_membership"].add_all(submersion.total.membership_defect(batch))
    trackers["target_membership"].add_all(_target_defects(submersion, batch))

    for sample in samples:
        geometry, rng = sample.geometry, sample.rng(FIBRATION_STREAM)
        p, g = geometry.p, geometry.g
        image = submersion.evaluate(p)
        differential = submersion.differential(p)

        trackers["total_membership"].add(submersion.total.membership_defect(p))
        trackers["euler_identity"].add(scaled(np.linalg.norm(differential @ p - 2.0 * image), p, p))
        rank = numerical_rank(differential @ geometry.tangent, RANK_THRESHOLD)
        trackers["differential_rank"].add(abs(rank - submersion.base_dim))

        x, y = geometry.random_horizontal(rng), geometry.random_horizontal(rng)
        pushed_inner = _base_inner(submersion, differential @ x, differential @ y)
        trackers["submersion_isometry"].add(scaled(pushed_inner - g(x, y), x, y))

        for v in geometry.vertical_frame.vectors:
            trackers["splitting_orthogonality"].add(scaled(abs(g(v, x)), v, x))
            trackers["splitting_orthogonality"].add(scaled(np.linalg.norm(differential @ v), p, v))
        index = int(np.sum(geometry.vertical_frame.signs < 0))
        trackers["vertical_signature"].add(abs(index - submersion.fibre_index))

        v = _unit_vertical(geometry, rng)
        for s in np.linspace(*submersion.fibre_parameter_range(v), _GEODESIC_POINTS):
            q = submersion.fibre_point(p, v, s)
            trackers["fibre_geodesic"].add(np.linalg.norm(submersion.evaluate(q) - image)
                                           / max(1.0, float(np.linalg.norm(image))))

        trackers["horizontal_lift"].add(_lift_residual(submersion, geometry, rng))

        frame = geometry.horizontal_frame
        fields = [basic_extension(submersion, p, h) for h in frame.vectors]
        for s in np.linspace(0.1, 1.0, _PUSH_POINTS):
            q = submersion.fibre_point(p, v, s)
            moved = np.array([field(q) for field in fields])
            gram = (moved * geometry.eta) @ moved.T
            trackers["metric_push_consistency"].add(np.max(np.abs(gram - frame.gram(geometry.eta))))

        if submersion.is_composite:
            trackers["orbit_reproduction"].add(orbit_reproduction_residual(submersion, rng))

    return build_report(submersion.spec.label, seed, trackers, tolerances)


def orbit_reproduction_residual(submersion: CompositeSubmersion, rng: np.random.Generator) -> float:
    """
    theta o pi_inner = pi_outer: a point w of the standalone inner quotient and points w u of its inner orbit
    all land on the same outer invariant, and the coordinate identification is a bijection onto the quadric.
    """
    standalone = submersion.standalone_inner()
    composed = ComposedMap(submersion, standalone)
    w = standalone.random_point(rng)
    z = submersion.from_standalone(w)
    reference = submersion.outer.evaluate(z)
    residual = max(float(submersion.total.membership_defect(z)),
                   float(np.linalg.norm(submersion.to_standalone(z) - w)),
                   float(np.linalg.norm(composed.evaluate(w) - reference)))
    direction = standalone.random_vertical(rng, w)
    direction = direction / np.sqrt(abs(float(standalone.inner(direction, direction))))
    for s in np.linspace(*standalone.fibre_parameter_range(direction), _ORBIT_POINTS):
        moved = standalone.fibre_point(w, direction, s)
        residual = max(residual, float(np.linalg.norm(composed.evaluate(moved) - reference)))
    return residual / max(1.0, float(np.linalg.norm(reference)))
