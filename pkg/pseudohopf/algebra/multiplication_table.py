from __future__ import annotations

import numpy as np

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, Optional, Tuple

from .algebra_tag import AlgebraTag
from .algebra_exception import AlgebraException
from . import cayley_dickson


@dataclass(frozen=True, eq=False)
class MultiplicationTable:
    """e_i e_j = signs[i, j] * e_{indices[i, j]} (zero-based indices)."""
    tag: AlgebraTag
    indices: np.ndarray
    signs: np.ndarray
    metadata: Dict[str, Any] = field(default_factory=dict)

    def product(self, i: int, j: int) -> Tuple[int, int]:
        return int(self.indices[i, j]), int(self.signs[i, j])

    def structure_constants(self) -> np.ndarray:
        """c[i, j, k] with e_i e_j = sum_k c[i, j, k] e_k."""
        dim = self.tag.dim
        constants = np.zeros((dim, dim, dim), dtype=int)
        for i, j in product(range(dim), range(dim)):
            constants[i, j, self.indices[i, j]] = self.signs[i, j]
        return constants

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("...i,...j,ijk->...k", x, y, self.structure_constants())

    def to_dict(self) -> Dict[str, Any]:
        dim = self.tag.dim
        return {
            "algebra": self.tag.name.name,
            "dim": dim,
            "doubling_signs": list(self.tag.doubling_signs),
            "metadata": dict(self.metadata),
            "entries": [[{"index": int(self.indices[i, j]), "sign": int(self.signs[i, j])} for j in range(dim)]
                        for i in range(dim)],
        }


def build_multiplication_table(tag: AlgebraTag) -> MultiplicationTable:
    """Exact table from integer basis products."""
    dim = tag.dim
    indices = np.zeros((dim, dim), dtype=int)
    signs = np.zeros((dim, dim), dtype=int)
    for i, j in product(range(dim), range(dim)):
        result = cayley_dickson.multiply(tag,
                                         cayley_dickson.basis_element(tag, i, dtype=int),
                                         cayley_dickson.basis_element(tag, j, dtype=int))
        nonzero = np.flatnonzero(result)
        if len(nonzero) != 1 or abs(result[nonzero[0]]) != 1:
            raise AlgebraException(f"Basis product e{i + 1} e{j + 1} is not a signed basis element: {result}")
        indices[i, j] = nonzero[0]
        signs[i, j] = result[nonzero[0]]
    metadata = {"convention": tag.convention,
                "norm_signature": list(tag.norm_signature)}
    return MultiplicationTable(tag=tag, indices=indices, signs=signs, metadata=metadata)


def associator_witness(tag: AlgebraTag) -> Optional[Tuple[int, int, int]]:
    """First basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), or None."""
    dim = tag.dim
    basis = [cayley_dickson.basis_element(tag, i, dtype=int) for i in range(dim)]
    for i, j, k in product(range(dim), repeat=3):
        left = cayley_dickson.multiply(tag, cayley_dickson.multiply(tag, basis[i], basis[j]), basis[k])
        right = cayley_dickson.multiply(tag, basis[i], cayley_dickson.multiply(tag, basis[j], basis[k]))
        if np.any(left != right):
            return i, j, k
    return None
