import numpy as np

from typing import Callable

from .field_evaluator import FieldEvaluator

from ..spaces import PseudoHyperbolicSpace
from ..utilities.constants import FD_STEP


def richardson_derivative(curve: Callable[[float], np.ndarray], step: float = FD_STEP) -> np.ndarray:
    """
    d/ds curve(s) at s = 0: central differences at steps h and h/2, combined by one Richardson step.
    """
    coarse = (curve(step) - curve(-step)) / (2.0 * step)
    fine = (curve(step / 2.0) - curve(-step / 2.0)) / step
    return (4.0 * fine - coarse) / 3.0


def covariant_derivative(space: PseudoHyperbolicSpace, field: FieldEvaluator, p: np.ndarray, e: np.ndarray,
                         step: float = FD_STEP) -> np.ndarray:
    """
    Levi-Civita derivative on the quadric (Gauss formula): tangential part of the flat derivative of the field
    along the geodesic through p with velocity e.
    """
    p, e = np.asarray(p, dtype=float), np.asarray(e, dtype=float)
    ambient = richardson_derivative(lambda s: field(space.geodesic_coords(p, e, s, check=False)), step)
    return space.project_to_tangent(p, ambient)


def constant_field_derivative(space: PseudoHyperbolicSpace, constant: np.ndarray, p: np.ndarray,
                              e: np.ndarray) -> np.ndarray:
    """Closed form of nabla_e (q -> P_q c): -<c, p> e / <p, p>."""
    return -float(space.inner(constant, p)) / float(space.inner(p, p)) * np.asarray(e, dtype=float)
