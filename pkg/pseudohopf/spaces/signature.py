from __future__ import annotations

import numpy as np

from dataclasses import dataclass

from .spaces_exception import SpaceException


@dataclass(frozen=True)
class Signature:
    """Dimension and index (number of negative directions) of a scalar product."""
    dim: int
    index: int

    def __post_init__(self):
        if not 0 <= self.index <= self.dim:
            raise SpaceException(f"Invalid signature: index {self.index} for dimension {self.dim}")

    @property
    def positive(self) -> int:
        return self.dim - self.index

    def metric_diagonal(self) -> np.ndarray:
        return np.concatenate([-np.ones(self.index), np.ones(self.dim - self.index)])

    @classmethod
    def from_signs(cls, signs) -> Signature:
        signs = np.asarray(signs)
        return cls(dim=len(signs), index=int(np.sum(signs < 0)))

    def __str__(self):
        return f"({self.positive},{self.index})"
