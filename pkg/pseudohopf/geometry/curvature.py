from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import Callable, Optional

from .point_geometry import PointGeometry

from ..fibrations import HopfSubmersion
from ..spaces import PseudoHyperbolicSpace
from ..utilities.constants import BASE_CURVATURE

CurvatureFunction = Callable[[np.ndarray, np.ndarray, np.ndarray, np.ndarray], float]


def constant_curvature_form(c: float, inner: Callable[[np.ndarray, np.ndarray], float], x, y, z, w) -> float:
    """c (g(X,Z) g(Y,W) - g(X,W) g(Y,Z)), so that R(X,Y,X,Y) = c (g(X,X) g(Y,Y) - g(X,Y)^2)."""
    return c * (float(inner(x, z)) * float(inner(y, w)) - float(inner(x, w)) * float(inner(y, z)))


def constant_curvature_R(space: PseudoHyperbolicSpace, x, y, z, w) -> float:
    return constant_curvature_form(space.c, space.inner, x, y, z, w)


@dataclass(frozen=True, eq=False)
class CurvatureValue:
    """Entries R(E_a, E_b, E_c, E_d) over a list of tangent vectors."""
    entries: np.ndarray

    @classmethod
    def evaluate(cls, function: CurvatureFunction, vectors) -> CurvatureValue:
        k = len(vectors)
        entries = np.zeros((k, k, k, k))
        for a in range(k):
            for b in range(k):
                for c in range(k):
                    for d in range(k):
                        entries[a, b, c, d] = function(vectors[a], vectors[b], vectors[c], vectors[d])
        return cls(entries)

    def antisymmetry_residual(self) -> float:
        first = np.abs(self.entries + np.transpose(self.entries, (1, 0, 2, 3)))
        second = np.abs(self.entries + np.transpose(self.entries, (0, 1, 3, 2)))
        return float(max(np.max(first), np.max(second)))

    def bianchi_residual(self) -> float:
        """R(X,Y,Z,W) + R(Y,Z,X,W) + R(Z,X,Y,W)."""
        cyclic = self.entries + np.transpose(self.entries, (2, 0, 1, 3)) + np.transpose(self.entries, (1, 2, 0, 3))
        return float(np.max(np.abs(cyclic)))


def clifford_curvature(geometry: PointGeometry, x, y, z, w, c: Optional[float] = None) -> float:
    """
    g(R'(X,Y)W, Z) for R'(X,Y)W = c (g(Y,W)X - g(X,W)Y)
                                  + c sum_i eps_i (g(J_i Y, W) J_i X - g(J_i X, W) J_i Y - 2 g(J_i X, Y) J_i W),
    with J_i X = A_X v_i and eps_i = c g(v_i, v_i) from the given geometry.
    """
    c = geometry.c if c is None else c
    g = geometry.g
    value = c * (g(y, w) * g(x, z) - g(x, w) * g(y, z))
    j_x, j_y, j_w = geometry.a_on_vertical(x), geometry.a_on_vertical(y), geometry.a_on_vertical(w)
    for i, sign in enumerate(geometry.vertical_frame.signs):
        epsilon = c * sign
        value += c * epsilon * (g(j_y[:, i], w) * g(j_x[:, i], z) - g(j_x[:, i], w) * g(j_y[:, i], z)
                                - 2.0 * g(j_x[:, i], y) * g(j_w[:, i], z))
    return value


def base_curvature_model(geometry: PointGeometry,
                         model_geometry: Optional[PointGeometry] = None) -> CurvatureFunction:
    """
    Base curvature independent of the solved O'Neill equation: constant curvature -4 on pushforwards for
    explicit targets, the Clifford formula of the (outer) quotient otherwise.
    """
    submersion = geometry.submersion
    if isinstance(submersion, HopfSubmersion):
        p = geometry.p
        target = submersion.target

        def explicit(x, y, z, w):
            pushed = [submersion.pushforward(p, vector) for vector in (x, y, z, w)]
            return constant_curvature_form(BASE_CURVATURE, target.inner, *pushed)

        return explicit
    model_geometry = geometry if model_geometry is None else model_geometry
    return lambda x, y, z, w: clifford_curvature(model_geometry, x, y, z, w)


def fibre_curvature_model(geometry: PointGeometry) -> CurvatureFunction:
    """Constant curvature of the fibre: -1 for fibres in a quadric total, -4 for composite fibres."""
    c = BASE_CURVATURE if geometry.submersion.is_composite else geometry.c
    return lambda u, v, w, z: constant_curvature_form(c, geometry.g, u, v, w, z)
