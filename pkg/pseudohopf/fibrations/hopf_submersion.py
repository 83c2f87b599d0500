from __future__ import annotations

import numpy as np

from typing import Optional

from .fibration_id import FibrationId
from .fibration_exception import FibrationException
from .hopf_construction import HopfConstruction
from .fibration_spec import ExplicitQuadric, FibreDescriptor, FibrationSpec, TargetKind, space_name
from .submersion import Submersion

from ..algebra import multiply
from ..utilities.constants import BASE_CURVATURE

_FIBRE_TOLERANCE = 1e-9
_LIFT_TOLERANCE = 1e-8


def hopf_spec(fibration_id: Optional[FibrationId], construction: HopfConstruction,
              name: Optional[str] = None) -> FibrationSpec:
    domain, target = construction.domain, construction.target
    fibre_dim = domain.m - target.m
    fibre_index = domain.t - target.t
    return FibrationSpec(id=fibration_id,
                         total=domain,
                         base=ExplicitQuadric(dim=target.m, index=target.t, curvature=BASE_CURVATURE),
                         fibre=FibreDescriptor(dim=fibre_dim, index=fibre_index,
                                               model=space_name(fibre_dim, fibre_index)),
                         target_kind=TargetKind.explicit,
                         evaluator=construction.name,
                         name=name)


class HopfSubmersion(Submersion):
    """A Hopf map H^{2d-1}_l -> H^d_s(-4) with an explicit quadric target."""

    def __init__(self, fibration_id: Optional[FibrationId], construction: HopfConstruction, name: Optional[str] = None):
        super().__init__(spec=hopf_spec(fibration_id, construction, name), total=construction.domain)
        self.construction = construction
        self.target = construction.target

    @property
    def algebra(self):
        return self.construction.algebra

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        return self.construction.evaluate(z)

    def __call__(self, p: np.ndarray) -> np.ndarray:
        self.check_point(p)
        return self.evaluate(p)

    def vertical_basis(self, q: np.ndarray) -> np.ndarray:
        """Kernel of [d pi_q ; (eta q)^T], the last r right-singular vectors."""
        q = np.asarray(q, dtype=float)
        system = np.vstack([self.differential(q), (self.eta * q)[None, :]])
        _, singular_values, vt = np.linalg.svd(system)
        rank = self.total.ambient_dim - self.fibre_dim
        if rank > len(singular_values) or singular_values[rank - 1] <= 1e-8 * max(1.0, singular_values[0]):
            raise FibrationException(f"{self.spec.label}: differential drops rank at the given point")
        return vt[rank:]

    def _left_orbit_columns(self, p: np.ndarray) -> np.ndarray:
        x, y = self.construction.split(p)
        columns = []
        for j in range(self.algebra.dim):
            unit = np.zeros(self.algebra.dim)
            unit[j] = 1.0
            columns.append(self.construction.join(multiply(self.algebra, unit, x), multiply(self.algebra, unit, y)))
        return np.array(columns).T

    def same_fibre(self, p: np.ndarray, q: np.ndarray) -> bool:
        """
        Associative algebras: q = u p for a solved unit u. Octonionic maps: evaluator equality.
        """
        p, q = np.asarray(p, dtype=float), np.asarray(q, dtype=float)
        if not self.algebra.is_associative:
            image = self.evaluate(p)
            scale = max(1.0, float(np.linalg.norm(image)))
            return bool(np.linalg.norm(self.evaluate(q) - image) <= _FIBRE_TOLERANCE * scale)
        columns = self._left_orbit_columns(p)
        u, *_ = np.linalg.lstsq(columns, q, rcond=None)
        residual = float(np.linalg.norm(columns @ u - q))
        unit_defect = abs(float(np.sum(self.algebra.norm_signs * u * u)) - 1.0)
        scale = max(1.0, float(np.linalg.norm(q)))
        return residual <= _FIBRE_TOLERANCE * scale and unit_defect <= _FIBRE_TOLERANCE * scale

    def lift(self, p: np.ndarray, w: np.ndarray) -> np.ndarray:
        """The horizontal X at p with d pi_p X = w, for w tangent to the target at pi(p)."""
        p, w = np.asarray(p, dtype=float), np.asarray(w, dtype=float)
        self.check_point(p)
        image = self.evaluate(p)
        if not self.target.is_tangent(image, w, tolerance=1e-10):
            raise FibrationException(f"{self.spec.label}: lift datum is not tangent to the target at pi(p)")
        frame = self.horizontal_space(p)
        pushed = self.differential(p) @ frame.vectors.T
        coefficients, *_ = np.linalg.lstsq(pushed, w, rcond=None)
        residual = float(np.linalg.norm(pushed @ coefficients - w))
        if residual > _LIFT_TOLERANCE * max(1.0, float(np.linalg.norm(w))):
            raise FibrationException(f"{self.spec.label}: lift datum is outside the image of d pi on H_p "
                                     f"(residual {residual:.3e})")
        return frame.combine(coefficients)
