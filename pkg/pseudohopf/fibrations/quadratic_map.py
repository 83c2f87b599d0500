import numpy as np

from typing import Callable

QuadraticMap = Callable[[np.ndarray], np.ndarray]


def polarized_differential(quadratic: QuadraticMap, p: np.ndarray) -> np.ndarray:
    """
    Exact differential of a homogeneous quadratic map Q at p.

    Column j is Q(p + e_j) - Q(p) - Q(e_j) = B(p, e_j) + B(e_j, p). `quadratic` must broadcast over leading axes.
    """
    p = np.asarray(p, dtype=float)
    unit_vectors = np.eye(len(p))
    at_p = quadratic(p)
    at_units = quadratic(unit_vectors)
    at_shifted = quadratic(p + unit_vectors)
    return (at_shifted - at_p - at_units).T


def numerical_rank(matrix: np.ndarray, threshold: float) -> int:
    singular_values = np.linalg.svd(matrix, compute_uv=False)
    if len(singular_values) == 0:
        return 0
    return int(np.sum(singular_values > threshold * max(1.0, float(singular_values[0]))))
