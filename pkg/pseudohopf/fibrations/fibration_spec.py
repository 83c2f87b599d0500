from __future__ import annotations

from enum import Enum
from dataclasses import dataclass
from typing import Any, Dict, Optional, Tuple, Union

from .fibration_id import FibrationId
from .fibration_exception import FibrationException

from ..algebra import AlgebraName
from ..spaces import PseudoHyperbolicSpace
from ..utilities.constants import BASE_CURVATURE


class TargetKind(Enum):
    explicit = 1
    quotient = 2

    def __str__(self):
        return self.name


_QUOTIENT_SYMBOLS = {AlgebraName.C: "C", AlgebraName.A: "A", AlgebraName.H: "H", AlgebraName.B: "B"}
_ALGEBRA_DIMS = {AlgebraName.C: 2, AlgebraName.A: 2, AlgebraName.H: 4, AlgebraName.B: 4}


def space_name(dim: int, index: int, curvature: Optional[float] = None) -> str:
    name = f"H^{dim}" if index == 0 else f"H^{dim}_{index}"
    return name if curvature is None else f"{name}({curvature:g})"


@dataclass(frozen=True)
class ExplicitQuadric:
    dim: int
    index: int
    curvature: float = BASE_CURVATURE

    @property
    def name(self) -> str:
        return space_name(self.dim, self.index, self.curvature)

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "explicit", "name": self.name, "n": self.dim, "s": self.index,
                "curvature": self.curvature}


@dataclass(frozen=True)
class QuotientBase:
    """
    K H^m_t for K in {C, H}, K P^m for K in {A, B}; real dimension d m.

    For the split algebras the index is forced (m for A, 2m for B) and `t` is unused.
    """
    algebra: AlgebraName
    m: int
    t: int = 0

    def __post_init__(self):
        if self.algebra not in _QUOTIENT_SYMBOLS:
            raise FibrationException(f"No quotient base over {self.algebra}")
        if self.m < 1 or not 0 <= self.t <= self.m:
            raise FibrationException(f"Invalid quotient parameters m={self.m}, t={self.t}")

    @property
    def is_split(self) -> bool:
        return self.algebra in (AlgebraName.A, AlgebraName.B)

    @property
    def dim(self) -> int:
        return _ALGEBRA_DIMS[self.algebra] * self.m

    @property
    def index(self) -> int:
        if self.algebra == AlgebraName.A:
            return self.m
        if self.algebra == AlgebraName.B:
            return 2 * self.m
        return _ALGEBRA_DIMS[self.algebra] * self.t

    @property
    def name(self) -> str:
        symbol = _QUOTIENT_SYMBOLS[self.algebra]
        if self.is_split:
            return f"{symbol}P^{self.m}"
        return f"{symbol}H^{self.m}" if self.t == 0 else f"{symbol}H^{self.m}_{self.t}"

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": "quotient", "name": self.name, "algebra": self.algebra.name, "m": self.m,
                "t": self.t, "n": self.dim, "s": self.index, "curvature": BASE_CURVATURE}


@dataclass(frozen=True)
class FibreDescriptor:
    dim: int
    index: int
    model: str

    def to_dict(self) -> Dict[str, Any]:
        return {"r": self.dim, "r_prime": self.index, "model": self.model}


@dataclass(frozen=True)
class FibrationSpec:
    """One catalogued submersion: total space, base, fibre and evaluator kind."""
    id: Optional[FibrationId]
    total: Union[PseudoHyperbolicSpace, QuotientBase]
    base: Union[ExplicitQuadric, QuotientBase]
    fibre: FibreDescriptor
    target_kind: TargetKind
    evaluator: str
    parameters: Tuple[Tuple[str, int], ...] = ()
    name: Optional[str] = None

    def __post_init__(self):
        if self.total_dim != self.base.dim + self.fibre.dim:
            raise FibrationException(f"{self.label}: dim total {self.total_dim} != "
                                     f"dim base {self.base.dim} + r {self.fibre.dim}")
        if self.total_index != self.base.index + self.fibre.index:
            raise FibrationException(f"{self.label}: index total {self.total_index} != "
                                     f"index base {self.base.index} + r' {self.fibre.index}")

    @property
    def total_dim(self) -> int:
        return self.total.m if isinstance(self.total, PseudoHyperbolicSpace) else self.total.dim

    @property
    def total_index(self) -> int:
        return self.total.t if isinstance(self.total, PseudoHyperbolicSpace) else self.total.index

    @property
    def total_name(self) -> str:
        if isinstance(self.total, PseudoHyperbolicSpace):
            return space_name(self.total.m, self.total.t)
        return self.total.name

    @property
    def is_composite(self) -> bool:
        return isinstance(self.total, QuotientBase)

    @property
    def invariants(self) -> Tuple[int, int, int, int]:
        """(n, s, r, r')."""
        return self.base.dim, self.base.index, self.fibre.dim, self.fibre.index

    @property
    def label(self) -> str:
        base_label = self.name or (self.id.name if self.id else "fibration")
        if not self.parameters:
            return base_label
        return f"{base_label}({','.join(f'{key}={value}' for key, value in self.parameters)})"

    def parameter(self, key: str) -> Optional[int]:
        return dict(self.parameters).get(key)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id.name if self.id else self.name,
            "label": self.label,
            "total": {"name": self.total_name, "a": self.total_dim, "l": self.total_index},
            "base": self.base.to_dict(),
            "fibre": self.fibre.to_dict(),
            "target_kind": str(self.target_kind),
            "evaluator": self.evaluator,
        }
