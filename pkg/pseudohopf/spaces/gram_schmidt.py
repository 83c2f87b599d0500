from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from .signature import Signature
from .spaces_exception import DegenerateSubspaceException

from ..utilities.constants import NULL_THRESHOLD, DEPENDENCY_THRESHOLD, PIVOT_TIE_RELATIVE


@dataclass(frozen=True, eq=False)
class OrthonormalFrame:
    """Rows of `vectors` are pairwise orthogonal with <u_a, u_a> = signs[a] in {-1, +1}."""
    vectors: np.ndarray
    signs: np.ndarray

    @property
    def signature(self) -> Signature:
        return Signature.from_signs(self.signs)

    def __len__(self):
        return len(self.signs)

    def __getitem__(self, index: int) -> np.ndarray:
        return self.vectors[index]

    def coefficients(self, eta: np.ndarray, x: np.ndarray) -> np.ndarray:
        """x = sum_a coeff_a u_a for x in the span."""
        return self.signs * (self.vectors @ (eta * np.asarray(x)))

    def combine(self, coefficients: np.ndarray) -> np.ndarray:
        return np.asarray(coefficients) @ self.vectors

    def projector(self, eta: np.ndarray) -> np.ndarray:
        """Orthogonal projection onto the span: x -> sum_a signs_a <x, u_a> u_a."""
        return (self.vectors.T * self.signs) @ (self.vectors * eta)

    def gram(self, eta: np.ndarray) -> np.ndarray:
        return (self.vectors * eta) @ self.vectors.T

    def of_sign(self, sign: int) -> np.ndarray:
        return self.vectors[self.signs == sign]

    def to_dict(self, space_id: Optional[str] = None) -> Dict[str, Any]:
        result = {"vectors": self.vectors.tolist(), "signs": self.signs.astype(int).tolist()}
        if space_id is not None:
            result["space"] = space_id
        return result


def _inner(eta: np.ndarray, x: np.ndarray, y: np.ndarray) -> float:
    return float(np.sum(eta * x * y))


def _pivot(candidates: List[np.ndarray], eta: np.ndarray) -> Optional[int]:
    """Index maximizing |<u,u>|; near-ties resolve to the earliest candidate; None if all are null."""
    norms = np.array([abs(_inner(eta, u, u)) for u in candidates])
    euclidean = np.array([u @ u for u in candidates])
    non_null = norms > NULL_THRESHOLD * euclidean
    if not np.any(non_null):
        return None
    best = np.max(norms[non_null])
    for index, (value, valid) in enumerate(zip(norms, non_null)):
        if valid and value >= best * (1.0 - PIVOT_TIE_RELATIVE):
            return index
    return None


def indefinite_gram_schmidt(vectors: Sequence[np.ndarray], eta: np.ndarray,
                            max_vectors: Optional[int] = None) -> OrthonormalFrame:
    """
    Orthonormalize with respect to the diagonal scalar product eta.

    Dependent vectors (vanishing after projection) are dropped. At every step the remaining vector with the
    largest |<u,u>| becomes the next pivot; when every remaining vector is null, pairwise sums and differences
    are tried before the subspace is declared degenerate.
    """
    eta = np.asarray(eta, dtype=float)
    candidates = [np.array(vector, dtype=float) for vector in vectors]
    if not candidates:
        return OrthonormalFrame(vectors=np.zeros((0, len(eta))), signs=np.zeros(0, dtype=int))
    reference = max(1.0, max(float(np.linalg.norm(vector)) for vector in candidates))

    outputs, signs = [], []
    while candidates and (max_vectors is None or len(outputs) < max_vectors):
        candidates = [u for u in candidates if np.linalg.norm(u) > DEPENDENCY_THRESHOLD * reference]
        if not candidates:
            break

        index = _pivot(candidates, eta)
        if index is None:
            index = _resolve_null_candidates(candidates, eta)

        pivot = candidates.pop(index)
        norm = _inner(eta, pivot, pivot)
        sign = 1 if norm > 0 else -1
        unit = pivot / np.sqrt(abs(norm))
        outputs.append(unit)
        signs.append(sign)
        candidates = [u - sign * _inner(eta, u, unit) * unit for u in candidates]

    if not outputs:
        return OrthonormalFrame(vectors=np.zeros((0, len(eta))), signs=np.zeros(0, dtype=int))
    return OrthonormalFrame(vectors=np.array(outputs), signs=np.array(signs, dtype=int))


def _resolve_null_candidates(candidates: List[np.ndarray], eta: np.ndarray) -> int:
    """Replace a null candidate u_i by u_i +- u_j (same span) and return its index."""
    best, best_value = None, 0.0
    for i in range(len(candidates)):
        for j in range(i + 1, len(candidates)):
            for combination in (candidates[i] + candidates[j], candidates[i] - candidates[j]):
                value = abs(_inner(eta, combination, combination))
                if value > NULL_THRESHOLD * (combination @ combination) and value > best_value:
                    best, best_value = (i, combination), value
    if best is None:
        raise DegenerateSubspaceException(
            f"All {len(candidates)} remaining pivot candidates are null (|<u,u>| <= {NULL_THRESHOLD:g}) "
            f"and no pairwise combination is non-null: the subspace is degenerate")
    index, combination = best
    candidates[index] = combination
    return index
