from __future__ import annotations

import numpy as np

from typing import List, Optional

from .connection import richardson_derivative
from .geometry_exception import GeometryException

from ..fibrations import Submersion, FibrationException
from ..spaces import OrthonormalFrame
from ..utilities.constants import FD_STEP


class PointGeometry:
    """
    Splitting, O'Neill tensors and curvature of one submersion at one point p.

    For a tangent direction E let O_E = (H_p - V_p) V'_E P_p, where V' is the derivative of the vertical
    projector field along the geodesic with velocity E and P_p the tangent projector of the total space. Then
    A_X = O_{hX} and T_U = O_{vU}. The operators of the horizontal and vertical frame vectors are computed once;
    all others follow by linearity.
    """

    def __init__(self, submersion: Submersion, p: np.ndarray, step: float = FD_STEP):
        submersion.check_point(p)
        self.submersion = submersion
        self.p = np.asarray(p, dtype=float)
        self.step = step
        self.eta = submersion.eta
        self.c = submersion.curvature
        try:
            self.tangent = submersion.tangent_projector(self.p)
            self.vertical = submersion.vertical_projector(self.p)
            self.vertical_frame: OrthonormalFrame = submersion.vertical_space(self.p)
            self.horizontal_frame: OrthonormalFrame = submersion.horizontal_space(self.p)
        except FibrationException as e:
            raise GeometryException(f"No splitting at the sampled point: {e}") from e
        self.horizontal = self.tangent - self.vertical
        self._horizontal_operators = np.array([self.operator(h) for h in self.horizontal_frame.vectors])
        self._vertical_operators = np.array([self.operator(v) for v in self.vertical_frame.vectors])
        self.inner_geometry: Optional[PointGeometry] = None
        if submersion.is_composite:
            self.inner_geometry = PointGeometry(submersion.inner, self.p, step)

    @property
    def base_dim(self) -> int:
        return len(self.horizontal_frame)

    @property
    def fibre_dim(self) -> int:
        return len(self.vertical_frame)

    def g(self, x: np.ndarray, y: np.ndarray) -> float:
        return float(np.sum(self.eta * x * y))

    def h(self, e: np.ndarray) -> np.ndarray:
        return self.horizontal @ e

    def v(self, e: np.ndarray) -> np.ndarray:
        return self.vertical @ e

    def projector_derivative(self, e: np.ndarray) -> np.ndarray:
        total = self.submersion.total

        def projector_along(s: float) -> np.ndarray:
            return self.submersion.vertical_projector(total.geodesic_coords(self.p, e, s, check=False))

        try:
            return richardson_derivative(projector_along, self.step)
        except FibrationException as e:
            raise GeometryException(f"Vertical projector undefined along the probe curve: {e}") from e

    def operator(self, e: np.ndarray) -> np.ndarray:
        return (self.horizontal - self.vertical) @ self.projector_derivative(e) @ self.tangent

    def a_operator(self, x: np.ndarray) -> np.ndarray:
        coefficients = self.horizontal_frame.coefficients(self.eta, self.h(x))
        return np.tensordot(coefficients, self._horizontal_operators, axes=1)

    def t_operator(self, u: np.ndarray) -> np.ndarray:
        coefficients = self.vertical_frame.coefficients(self.eta, self.v(u))
        return np.tensordot(coefficients, self._vertical_operators, axes=1)

    def A(self, e: np.ndarray, f: np.ndarray) -> np.ndarray:
        return self.a_operator(e) @ f

    def T(self, e: np.ndarray, f: np.ndarray) -> np.ndarray:
        return self.t_operator(e) @ f

    def a_on_vertical(self, x: np.ndarray) -> np.ndarray:
        """Columns A_X v_i for the vertical frame."""
        return self.a_operator(x) @ self.vertical_frame.vectors.T

    def total_curvature(self, x, y, z, w) -> float:
        """R(X,Y,Z,W) of the total space. Composite totals add the O'Neill terms of their inner quotient."""
        value = self.c * (self.g(x, z) * self.g(y, w) - self.g(x, w) * self.g(y, z))
        if self.inner_geometry is not None:
            value = self.inner_geometry.base_curvature(x, y, z, w, total=value)
        return value

    def base_curvature(self, x, y, z, w, total: Optional[float] = None) -> float:
        """R'(X,Y,Z,W) solved from O'Neill's horizontal equation, for horizontal arguments."""
        if total is None:
            total = self.total_curvature(x, y, z, w)
        g, a = self.g, self.A
        return (total + 2.0 * g(a(x, y), a(z, w)) - g(a(y, z), a(x, w)) + g(a(x, z), a(y, w)))

    def random_horizontal(self, rng: np.random.Generator) -> np.ndarray:
        return self.horizontal_frame.combine(rng.normal(size=self.base_dim))

    def random_vertical(self, rng: np.random.Generator) -> np.ndarray:
        return self.vertical_frame.combine(rng.normal(size=self.fibre_dim))

    def random_tangent(self, rng: np.random.Generator) -> np.ndarray:
        return self.random_horizontal(rng) + self.random_vertical(rng)

    def unit_horizontal(self, rng: np.random.Generator, sign: int, min_ratio: float) -> Optional[np.ndarray]:
        """Random unit horizontal X with g(X,X) = sign, kept away from the null cone; None without such X."""
        return _unit_in_frame(self.horizontal_frame, rng, sign, min_ratio)

    def causal_signs(self, frame: OrthonormalFrame) -> List[int]:
        return [sign for sign in (1, -1) if np.any(frame.signs == sign)]


_MAX_DRAWS = 200


def _unit_in_frame(frame: OrthonormalFrame, rng: np.random.Generator, sign: int,
                   min_ratio: float) -> Optional[np.ndarray]:
    if not np.any(frame.signs == sign):
        return None
    for _ in range(_MAX_DRAWS):
        coefficients = rng.normal(size=len(frame))
        value = float(np.sum(frame.signs * coefficients ** 2))
        if value * sign >= min_ratio * float(coefficients @ coefficients):
            return frame.combine(coefficients / np.sqrt(abs(value)))
    coefficients = np.where(frame.signs == sign, rng.normal(size=len(frame)), 0.0)
    return frame.combine(coefficients / np.sqrt(float(coefficients @ coefficients)))
