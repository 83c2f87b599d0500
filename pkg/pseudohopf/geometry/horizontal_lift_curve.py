from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .geometry_exception import GeometryException
from .sampling import PointSample, LIFT_STREAM, make_trackers, build_report

from ..fibrations import Submersion, FibrationException, HopfSubmersion, QuotientSubmersion, CompositeSubmersion
from ..spaces import PseudoHyperbolicSpace, ReprojectionCounter, SpaceException
from ..utilities import Tolerances, VerificationReport, get_logger
from ..utilities.constants import RK4_STEPS, LIFT_DRIFT_LIMIT

logger = get_logger(__name__)

LIFT_IDENTITIES = ("lift_retrace", "holonomy_isometry")

_LOOP_RADIUS = 0.25
_LIFT_POINTS = 2


@dataclass(frozen=True, eq=False)
class BaseCurve:
    """
    A curve b(t), t in [start, end], in the base of a submersion.

    It is carried by an upstairs shadow curve with pi(shadow(t)) = b(t), so that the base point and velocity
    are available for explicit and quotient targets alike.
    """
    shadow: Callable[[float], np.ndarray]
    shadow_velocity: Callable[[float], np.ndarray]
    start: float = 0.0
    end: float = 1.0
    closed: bool = False

    @classmethod
    def constant(cls, p: np.ndarray, start: float = 0.0, end: float = 1.0) -> BaseCurve:
        p = np.asarray(p, dtype=float)
        return cls(shadow=lambda t: p, shadow_velocity=lambda t: np.zeros_like(p), start=start, end=end)

    @classmethod
    def geodesic(cls, total: PseudoHyperbolicSpace, p: np.ndarray, x: np.ndarray, start: float = 0.0,
                 end: float = 1.0) -> BaseCurve:
        """Shadow along the total-space geodesic through a horizontal x; its image is a base geodesic."""
        return cls(shadow=lambda t: total.geodesic_coords(p, x, t, check=False),
                   shadow_velocity=lambda t: total.geodesic_velocity(p, x, t), start=start, end=end)

    @classmethod
    def loop(cls, total: PseudoHyperbolicSpace, p: np.ndarray, x: np.ndarray, y: np.ndarray,
             radius: float = _LOOP_RADIUS) -> BaseCurve:
        """shadow(t) = normalize(p + a sin(t) x + a (1 - cos(t)) y) on [0, 2 pi], a closed loop."""
        p, x, y = (np.asarray(v, dtype=float) for v in (p, x, y))

        def raw(t):
            return p + radius * np.sin(t) * x + radius * (1.0 - np.cos(t)) * y

        def raw_velocity(t):
            return radius * np.cos(t) * x + radius * np.sin(t) * y

        def shadow_velocity(t):
            f, df = raw(t), raw_velocity(t)
            kappa = total.c * float(total.inner(f, f))
            return df / np.sqrt(kappa) - f * total.c * float(total.inner(f, df)) / kappa ** 1.5

        return cls(shadow=lambda t: total.normalize(raw(t)), shadow_velocity=shadow_velocity,
                   start=0.0, end=2.0 * np.pi, closed=True)

    def times(self, steps: int) -> np.ndarray:
        return np.linspace(self.start, self.end, steps + 1)


@dataclass(frozen=True, eq=False)
class LiftedCurve:
    times: np.ndarray
    points: np.ndarray
    drift: float
    reprojections: int

    @property
    def end_point(self) -> np.ndarray:
        return self.points[-1]


def _least_squares_lift(submersion: Submersion, c: np.ndarray, w: np.ndarray) -> np.ndarray:
    """Horizontal vector at c whose pushforward is closest to w."""
    frame = submersion.horizontal_space(c)
    pushed = submersion.differential(c) @ frame.vectors.T
    coefficients, *_ = np.linalg.lstsq(pushed, w, rcond=None)
    return frame.combine(coefficients)


def _lift_velocity(submersion: Submersion, curve: BaseCurve) -> Callable[[float, np.ndarray], np.ndarray]:
    """
    Velocity field of the horizontal lift. It is smooth near the fibres over the curve, so the intermediate
    Runge-Kutta stages may leave them.
    """
    if isinstance(submersion, HopfSubmersion):
        def velocity(t, c):
            w = submersion.pushforward(curve.shadow(t), curve.shadow_velocity(t))
            return _least_squares_lift(submersion, c, w)
        return velocity

    quotient = submersion.outer if isinstance(submersion, CompositeSubmersion) else submersion
    if not isinstance(quotient, QuotientSubmersion):
        raise GeometryException(f"No horizontal lift of curves for {submersion}")

    def velocity(t, c):
        anchor = curve.shadow(t)
        u, _ = quotient.solve_unit(anchor, c)
        horizontal = quotient.horizontal_projector(anchor) @ curve.shadow_velocity(t)
        return quotient.horizontal_projector(c) @ quotient.right_multiply(horizontal, u)
    return velocity


def horizontal_lift_curve(submersion: Submersion, curve: BaseCurve, p0: np.ndarray, steps: int = RK4_STEPS,
                          counter: Optional[ReprojectionCounter] = None) -> LiftedCurve:
    """
    Horizontal lift of the base curve through p0 by classical fourth-order Runge-Kutta steps, re-projecting onto
    the total quadric after every step. The lift has to retrace the base curve within LIFT_DRIFT_LIMIT.
    """
    total = submersion.total
    p0 = np.asarray(p0, dtype=float)
    if not submersion.same_fibre(curve.shadow(curve.start), p0):
        raise GeometryException(f"{submersion.spec.label}: start point is not over the start of the base curve")
    counter = counter if counter is not None else ReprojectionCounter()
    velocity = _lift_velocity(submersion, curve)
    times = curve.times(steps)
    points = [p0]
    c = p0
    try:
        for t, t_next in zip(times[:-1], times[1:]):
            h = t_next - t
            k1 = velocity(t, c)
            k2 = velocity(t + h / 2.0, c + h / 2.0 * k1)
            k3 = velocity(t + h / 2.0, c + h / 2.0 * k2)
            k4 = velocity(t_next, c + h * k3)
            c = total.reproject(c + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4), counter)
            points.append(c)
    except (FibrationException, SpaceException, np.linalg.LinAlgError) as e:
        raise GeometryException(f"{submersion.spec.label}: horizontal lift step failed: {e}") from e

    points = np.array(points)
    drift = retrace_defect(submersion, curve, times, points)
    if drift > LIFT_DRIFT_LIMIT:
        raise GeometryException(f"{submersion.spec.label}: horizontal lift drifted {drift:.3e} off the base curve")
    return LiftedCurve(times=times, points=points, drift=drift, reprojections=counter.count)


def retrace_defect(submersion: Submersion, curve: BaseCurve, times: np.ndarray, points: np.ndarray) -> float:
    """max_t |pi(lift(t)) - b(t)|, relative to the size of the base point."""
    defect = 0.0
    for t, point in zip(times, points):
        base = submersion.evaluate(curve.shadow(t))
        scale = max(1.0, float(np.linalg.norm(base)))
        defect = max(defect, float(np.linalg.norm(submersion.evaluate(point) - base)) / scale)
    return defect


def holonomy_residual(submersion: Submersion, fibre_points: np.ndarray, end_points: np.ndarray) -> float:
    """Holonomy maps the fibre to itself and preserves the ambient inner products of fibre points."""
    residual = 0.0
    for i, (q, h) in enumerate(zip(fibre_points, end_points)):
        if not submersion.same_fibre(q, h):
            return 1.0
        for q2, h2 in zip(fibre_points[i:], end_points[i:]):
            expected = float(submersion.total.inner(q, q2))
            residual = max(residual, abs(float(submersion.total.inner(h, h2)) - expected) / max(1.0, abs(expected)))
    return residual


def _unit_coefficients(geometry, rng: np.random.Generator) -> np.ndarray:
    """Horizontal vector with unit coefficient norm in the horizontal frame, keeping loops near p."""
    coefficients = rng.normal(size=geometry.base_dim)
    return geometry.horizontal_frame.combine(coefficients / np.linalg.norm(coefficients))


def lift_checks(samples: Sequence[PointSample], tolerances: Tolerances, holonomy_samples: int) -> VerificationReport:
    """Horizontal lifts of closed base loops: retrace of the base curve and holonomy along the fibre."""
    submersion = samples[0].geometry.submersion
    label = submersion.spec.label
    trackers = make_trackers(LIFT_IDENTITIES)
    counter = ReprojectionCounter()

    for sample in samples[:_LIFT_POINTS]:
        geometry, rng = sample.geometry, sample.rng(LIFT_STREAM)
        p = geometry.p
        loop = BaseCurve.loop(submersion.total, p, _unit_coefficients(geometry, rng),
                              _unit_coefficients(geometry, rng))
        direction = geometry.random_vertical(rng)
        fibre_points = np.array([submersion.fibre_point(p, direction, s)
                                 for s in np.linspace(-1.0, 1.0, holonomy_samples)])
        try:
            lifts = [horizontal_lift_curve(submersion, loop, q, counter=counter) for q in fibre_points]
        except GeometryException as e:
            logger.warning(f"{label}: horizontal lift failed at sample {sample.index}: {e}")
            trackers["lift_retrace"].add(float("inf"))
            continue
        for lifted in lifts:
            trackers["lift_retrace"].add(lifted.drift)
        trackers["holonomy_isometry"].add(
            holonomy_residual(submersion, fibre_points, np.array([lifted.end_point for lifted in lifts])))

    report = build_report(label, samples[0].seed, trackers, tolerances)
    report.reprojections = counter.count
    return report
