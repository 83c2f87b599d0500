from __future__ import annotations

import numpy as np

from enum import Enum
from dataclasses import dataclass, replace
from typing import List, Tuple

from .algebra_exception import AlgebraException

STANDARD_CONVENTION = "standard"
MIRROR_CONVENTION = "mirror"


class AlgebraName(Enum):
    R = 0
    C = 1
    A = 2
    H = 3
    B = 4
    O = 5
    Oprime = 6

    @staticmethod
    def all() -> List[AlgebraName]:
        return [AlgebraName.C, AlgebraName.A, AlgebraName.H, AlgebraName.B, AlgebraName.O, AlgebraName.Oprime]

    @staticmethod
    def division_algebras() -> List[AlgebraName]:
        return [AlgebraName.C, AlgebraName.H, AlgebraName.O]

    @staticmethod
    def from_string(string: str) -> AlgebraName:
        return {name.name: name for name in AlgebraName}[string]

    def __str__(self):
        return self.name


_NAMES_BY_SIGNS = {
    (): AlgebraName.R,
    (-1,): AlgebraName.C,
    (1,): AlgebraName.A,
    (-1, -1): AlgebraName.H,
    (-1, 1): AlgebraName.B,
    (-1, -1, -1): AlgebraName.O,
    (-1, -1, 1): AlgebraName.Oprime,
}


@dataclass(frozen=True)
class AlgebraTag:
    """
    A Cayley-Dickson algebra, identified by the sign gamma used at every doubling step.

    The basis is the canonical doubled basis e_1 (unit), e_2, ..., e_d. `convention` selects the product rule
    (a,b)(c,e) = (ac + gamma conj(e) b, e a + b conj(c)) ("standard") or its mirror
    (ac + gamma b conj(e), conj(a) e + c b).
    """
    name: AlgebraName
    doubling_signs: Tuple[int, ...]
    convention: str = STANDARD_CONVENTION

    @property
    def dim(self) -> int:
        return 2 ** len(self.doubling_signs)

    @property
    def norm_signs(self) -> np.ndarray:
        """Diagonal of the norm form: N(z) = sum_j nu_j z_j^2."""
        signs = np.ones(1, dtype=int)
        for gamma in self.doubling_signs:
            signs = np.concatenate([signs, -gamma * signs])
        return signs

    @property
    def norm_signature(self) -> Tuple[int, int]:
        signs = self.norm_signs
        return int(np.sum(signs > 0)), int(np.sum(signs < 0))

    @property
    def is_division(self) -> bool:
        return self.name in AlgebraName.division_algebras()

    @property
    def is_associative(self) -> bool:
        return self.dim <= 4

    def with_convention(self, convention: str) -> AlgebraTag:
        if convention not in (STANDARD_CONVENTION, MIRROR_CONVENTION):
            raise AlgebraException(f"Unknown product convention: {convention}")
        return replace(self, convention=convention)

    def __str__(self):
        return self.name.name


REALS = AlgebraTag(name=AlgebraName.R, doubling_signs=())


def cayley_dickson_double(base: AlgebraTag, gamma: int) -> AlgebraTag:
    if base.dim > 4:
        raise AlgebraException(f"Doubling {base} (dim {base.dim}) past dimension 8 is not supported")
    if gamma not in (-1, 1):
        raise AlgebraException(f"Doubling sign must be -1 or +1, got {gamma}")
    signs = tuple(base.doubling_signs) + (int(gamma),)
    if signs not in _NAMES_BY_SIGNS:
        raise AlgebraException(f"Doubling signs {signs} do not give one of the provided algebras "
                               f"(C, A, H, B, O, Oprime)")
    return AlgebraTag(name=_NAMES_BY_SIGNS[signs], doubling_signs=signs, convention=base.convention)
