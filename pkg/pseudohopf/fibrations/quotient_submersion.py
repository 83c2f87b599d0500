from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .fibration_id import FibrationId
from .fibration_exception import FibrationException
from .fibration_spec import FibreDescriptor, FibrationSpec, QuotientBase, TargetKind
from .submersion import Submersion

from ..algebra import AlgebraName, AlgebraTag, get_algebra, multiply, conjugate, basis_element
from ..spaces import PseudoHyperbolicSpace
from ..utilities.constants import TOTAL_CURVATURE

_FIBRE_TOLERANCE = 1e-9
_LIFT_TOLERANCE = 1e-8

QUOTIENT_IDS: Dict[AlgebraName, FibrationId] = {
    AlgebraName.C: FibrationId.pi_C,
    AlgebraName.A: FibrationId.pi_A,
    AlgebraName.H: FibrationId.pi_H,
    AlgebraName.B: FibrationId.pi_B,
}

QUOTIENT_FIBRES: Dict[AlgebraName, FibreDescriptor] = {
    AlgebraName.C: FibreDescriptor(dim=1, index=1, model="H^1_1"),
    AlgebraName.A: FibreDescriptor(dim=1, index=0, model="H^1"),
    AlgebraName.H: FibreDescriptor(dim=3, index=3, model="H^3_3"),
    AlgebraName.B: FibreDescriptor(dim=3, index=1, model="H^3_1"),
}

# Imaginary units acting on the right; para-quaternions list the timelike unit last.
QUOTIENT_ACTIONS: Dict[AlgebraName, Tuple[int, ...]] = {
    AlgebraName.C: (1,),
    AlgebraName.A: (1,),
    AlgebraName.H: (1, 2, 3),
    AlgebraName.B: (2, 3, 1),
}


def quotient_spec(algebra: AlgebraName, m: int, t: int = 0) -> FibrationSpec:
    base = QuotientBase(algebra=algebra, m=m, t=t)
    fibre = QUOTIENT_FIBRES[algebra]
    d = get_algebra(algebra).dim
    parameters = (("m", m),) if base.is_split else (("m", m), ("t", t))
    return FibrationSpec(id=QUOTIENT_IDS[algebra],
                         total=PseudoHyperbolicSpace(m=d * (m + 1) - 1, t=base.index + fibre.index,
                                                     c=TOTAL_CURVATURE),
                         base=base,
                         fibre=fibre,
                         target_kind=TargetKind.quotient,
                         evaluator=f"projector:{algebra.name}",
                         parameters=parameters)


@dataclass(frozen=True, eq=False)
class QuotientPoint:
    """A point of K H^m_t, carried by an orbit representative and its Hermitian projector."""
    representative: np.ndarray
    invariant: np.ndarray

    def same_orbit(self, other: QuotientPoint, tolerance: float = _FIBRE_TOLERANCE) -> bool:
        scale = max(1.0, float(np.linalg.norm(self.invariant)))
        return bool(np.linalg.norm(self.invariant - other.invariant) <= tolerance * scale)


class ComponentLayout:
    """
    Real coordinates of K^{m+1} with the form sum_i sigma_i N(z_i).

    Coordinate (i, j) is coefficient j of component i with sign sigma_i nu_j. Enumerated coefficient-major and
    stable-sorted so the negative directions come first.
    """

    def __init__(self, algebra: AlgebraTag, component_signs: Sequence[int]):
        self.algebra = algebra
        self.component_signs = np.asarray(component_signs, dtype=int)
        components, d = len(self.component_signs), algebra.dim
        pairs = [(i, j) for j in range(d) for i in range(components)]
        signs = np.array([self.component_signs[i] * algebra.norm_signs[j] for i, j in pairs])
        order = np.argsort(signs, kind="stable")
        self.signs = signs[order]
        self.positions = np.zeros((components, d), dtype=int)
        for position, k in enumerate(order):
            i, j = pairs[k]
            self.positions[i, j] = position

    @property
    def components(self) -> int:
        return len(self.component_signs)

    @property
    def ambient_dim(self) -> int:
        return self.components * self.algebra.dim

    def to_components(self, z: np.ndarray) -> np.ndarray:
        return np.asarray(z, dtype=float)[..., self.positions]

    def from_components(self, components: np.ndarray) -> np.ndarray:
        components = np.asarray(components, dtype=float)
        z = np.empty(components.shape[:-2] + (self.ambient_dim,))
        z[..., self.positions] = components
        return z

    def right_multiply(self, z: np.ndarray, u: np.ndarray) -> np.ndarray:
        return self.from_components(multiply(self.algebra, self.to_components(z), np.asarray(u, dtype=float)))


class QuotientSubmersion(Submersion):
    """
    pi_K : H^{d(m+1)-1}_l -> K H^m_t (K P^m for the split algebras), z -> [z].

    The base point is represented by the real-flattened Hermitian projector z z*, invariant under the right
    action z -> z u of unit u. Vertical vectors at z are z e_j for the acting imaginary units e_j.
    """

    def __init__(self, algebra: AlgebraName, m: int, t: Optional[int] = None,
                 acting: Optional[Tuple[int, ...]] = None, spec: Optional[FibrationSpec] = None):
        if m < 1:
            raise FibrationException(f"Quotient fibrations need m >= 1, got {m}")
        if algebra in (AlgebraName.A, AlgebraName.B):
            t = m
        elif t is None or not 0 <= t <= m:
            raise FibrationException(f"Invalid index t={t} for {algebra} H^{m}")
        self.algebra_name = algebra
        self.m, self.t = m, t
        tag = get_algebra(algebra)
        self.layout = ComponentLayout(tag, [-1 if i <= t else 1 for i in range(m + 1)])
        self.acting = tuple(acting) if acting is not None else QUOTIENT_ACTIONS[algebra]
        if spec is None:
            spec = quotient_spec(algebra, m, 0 if algebra in (AlgebraName.A, AlgebraName.B) else t)
        total = PseudoHyperbolicSpace(m=self.layout.ambient_dim - 1, t=int(np.sum(self.layout.signs < 0)) - 1,
                                      c=TOTAL_CURVATURE)
        super().__init__(spec=spec, total=total)

    @property
    def algebra(self) -> AlgebraTag:
        return self.layout.algebra

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        components = self.layout.to_components(z)
        products = multiply(self.algebra, components[..., :, None, :], conjugate(components)[..., None, :, :])
        return products.reshape(products.shape[:-3] + (-1,))

    def quotient_point(self, z: np.ndarray) -> QuotientPoint:
        self.check_point(z)
        return QuotientPoint(representative=np.asarray(z, dtype=float), invariant=self.evaluate(z))

    def right_multiply(self, z: np.ndarray, u: np.ndarray) -> np.ndarray:
        return self.layout.right_multiply(z, u)

    def unit(self, index: int) -> np.ndarray:
        return basis_element(self.algebra, index)

    def vertical_basis(self, q: np.ndarray) -> np.ndarray:
        return np.array([self.right_multiply(q, self.unit(j)) for j in self.acting])

    def solve_unit(self, p: np.ndarray, q: np.ndarray) -> Tuple[np.ndarray, float]:
        """Least-squares u with q = p u, and the residual."""
        columns = np.array([self.right_multiply(p, self.unit(j)) for j in range(self.algebra.dim)]).T
        u, *_ = np.linalg.lstsq(columns, np.asarray(q, dtype=float), rcond=None)
        return u, float(np.linalg.norm(columns @ u - q))

    def is_unit(self, u: np.ndarray, tolerance: float = _FIBRE_TOLERANCE) -> bool:
        if abs(float(np.sum(self.algebra.norm_signs * u * u)) - 1.0) > tolerance:
            return False
        # the para-complex unit hyperbola has two branches; the fibre H^1 is the one through 1
        return self.algebra_name != AlgebraName.A or u[0] > 0

    def same_fibre(self, p: np.ndarray, q: np.ndarray) -> bool:
        u, residual = self.solve_unit(p, q)
        scale = max(1.0, float(np.linalg.norm(q)))
        return residual <= _FIBRE_TOLERANCE * scale and self.is_unit(u, _FIBRE_TOLERANCE * scale)

    def transport_horizontal(self, p: np.ndarray, x: np.ndarray, q: np.ndarray) -> np.ndarray:
        """
        Horizontal vector at q with the same pushforward as the horizontal x at p: x u for q = p u.
        """
        p, x, q = (np.asarray(v, dtype=float) for v in (p, x, q))
        u, residual = self.solve_unit(p, q)
        scale = max(1.0, float(np.linalg.norm(q)))
        if residual > _FIBRE_TOLERANCE * scale or not self.is_unit(u, _FIBRE_TOLERANCE * scale):
            raise FibrationException(f"{self.spec.label}: target point is not on the fibre of the reference")
        vertical_part = self.vertical_projector(p) @ x
        if np.linalg.norm(vertical_part) > 1e-8 * max(1.0, float(np.linalg.norm(x))):
            raise FibrationException(f"{self.spec.label}: reference vector is not horizontal")
        return self.right_multiply(x, u)

    def lift(self, p: np.ndarray, x: np.ndarray, q: Optional[np.ndarray] = None) -> np.ndarray:
        """Quotient targets carry base data as horizontal vectors at a marked point p; optionally moved to q."""
        p, x = np.asarray(p, dtype=float), np.asarray(x, dtype=float)
        self.check_point(p)
        horizontal = self.horizontal_projector(p) @ x
        residual = float(np.linalg.norm(x - horizontal))
        if residual > _LIFT_TOLERANCE * max(1.0, float(np.linalg.norm(x))):
            raise FibrationException(f"{self.spec.label}: lift datum is not horizontal at p (residual {residual:.3e})")
        return horizontal if q is None else self.transport_horizontal(p, horizontal, q)

