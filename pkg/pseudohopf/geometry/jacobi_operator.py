from __future__ import annotations

import numpy as np
import scipy.linalg

from dataclasses import dataclass
from typing import List, Tuple

from .geometry_exception import GeometryException
from .point_geometry import PointGeometry

from ..spaces import OrthonormalFrame, indefinite_gram_schmidt
from ..utilities.constants import NULL_THRESHOLD


@dataclass(frozen=True, eq=False)
class JacobiOperator:
    """
    Z -> R'(Z,X)X on the horizontal complement of a unit X, as a matrix in an orthonormal frame of that complement.

    With S_ab = R'(E_a, X, E_b, X) the matrix is diag(signs) S, which is self-adjoint for the induced metric
    exactly when S is symmetric.
    """
    base_vector: np.ndarray
    epsilon: int
    frame: OrthonormalFrame
    matrix: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.frame)

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues sorted by real part; complex parts are kept so that callers can audit them."""
        values = scipy.linalg.eigvals(self.matrix)
        return values[np.argsort(values.real, kind="stable")]

    def symmetry_defect(self) -> float:
        metric_form = self.frame.signs[:, None] * self.matrix
        return float(np.max(np.abs(metric_form - metric_form.T), initial=0.0))

    def apply(self, z: np.ndarray, eta: np.ndarray) -> np.ndarray:
        return self.frame.combine(self.matrix @ self.frame.coefficients(eta, z))


def unit_causal(geometry: PointGeometry, x: np.ndarray) -> Tuple[np.ndarray, int]:
    """Scale a horizontal x to g(X,X) = +-1; null vectors are rejected."""
    x = geometry.h(np.asarray(x, dtype=float))
    value = geometry.g(x, x)
    if abs(value) <= NULL_THRESHOLD * float(x @ x):
        raise GeometryException(f"Vector is null (g(X,X) = {value:.3e}); a unit causal vector is required")
    return x / np.sqrt(abs(value)), 1 if value > 0 else -1


def orthogonal_complement(geometry: PointGeometry, x: np.ndarray, epsilon: int) -> OrthonormalFrame:
    projected = [u - epsilon * geometry.g(u, x) * x for u in geometry.horizontal_frame.vectors]
    frame = indefinite_gram_schmidt(projected, geometry.eta, max_vectors=geometry.base_dim - 1)
    if len(frame) != geometry.base_dim - 1:
        raise GeometryException(f"Complement of X in the horizontal space has dimension {len(frame)}, "
                                f"expected {geometry.base_dim - 1}")
    return frame


def jacobi_operator(geometry: PointGeometry, x: np.ndarray) -> JacobiOperator:
    x, epsilon = unit_causal(geometry, x)
    frame = orthogonal_complement(geometry, x, epsilon)
    k = len(frame)
    metric_form = np.zeros((k, k))
    for a in range(k):
        for b in range(a, k):
            metric_form[a, b] = geometry.base_curvature(frame[a], x, frame[b], x)
            metric_form[b, a] = geometry.base_curvature(frame[b], x, frame[a], x) if a != b else metric_form[a, b]
    return JacobiOperator(base_vector=x, epsilon=epsilon, frame=frame,
                          matrix=frame.signs[:, None] * metric_form)


def predicted_spectrum(c: float, epsilon: int, n: int, r: int) -> List[Tuple[float, int]]:
    """(eigenvalue, multiplicity): 4 c eps on the A_X V directions, c eps on the rest of the complement."""
    spectrum = [(4.0 * c * epsilon, r)]
    if n - 1 - r > 0:
        spectrum.append((c * epsilon, n - 1 - r))
    return spectrum


def predicted_eigenvalues(c: float, epsilon: int, n: int, r: int) -> np.ndarray:
    values = [value for value, multiplicity in predicted_spectrum(c, epsilon, n, r) for _ in range(multiplicity)]
    return np.sort(np.array(values))
