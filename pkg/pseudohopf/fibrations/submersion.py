from __future__ import annotations

import numpy as np

from abc import ABC, abstractmethod

from .fibration_spec import FibrationSpec
from .fibration_exception import FibrationException
from .quadratic_map import polarized_differential

from ..spaces import (PseudoHyperbolicSpace, OrthonormalFrame, SpaceException, indefinite_gram_schmidt)
from ..utilities.constants import MEMBERSHIP_TOLERANCE, NONCOMPACT_FIBRE_RANGE

_DEGENERATE_CONDITION = 1e10


class Submersion(ABC):
    """
    A catalogued submersion evaluated upstairs on a pseudo-hyperbolic quadric.

    Subclasses provide the evaluator and a spanning set of the vertical space; the splitting T_pM = V_p + H_p,
    its projectors and frames are derived here.
    """

    def __init__(self, spec: FibrationSpec, total: PseudoHyperbolicSpace):
        self.spec = spec
        self.total = total

    @property
    def eta(self) -> np.ndarray:
        return self.total.eta

    @property
    def curvature(self) -> float:
        return self.total.c

    @property
    def fibre_dim(self) -> int:
        return self.spec.fibre.dim

    @property
    def fibre_index(self) -> int:
        return self.spec.fibre.index

    @property
    def base_dim(self) -> int:
        return self.spec.base.dim

    @property
    def base_index(self) -> int:
        return self.spec.base.index

    @property
    def is_composite(self) -> bool:
        return False

    @property
    def ambient_submersion(self) -> Submersion:
        """The submersion whose vertical projector field carries the geometry of the total space."""
        return self

    def inner(self, x: np.ndarray, y: np.ndarray):
        return self.total.inner(x, y)

    def check_point(self, p: np.ndarray, tolerance: float = MEMBERSHIP_TOLERANCE):
        p = np.asarray(p, dtype=float)
        try:
            self.total._check_length(p)
        except SpaceException as e:
            raise FibrationException(str(e)) from e
        scale = max(1.0, float(p @ p))
        defect = float(self.total.membership_defect(p))
        if defect > tolerance * scale:
            raise FibrationException(f"{self.spec.label}: point is off the domain quadric "
                                     f"{self.total.space_id} (defect {defect:.3e})")

    @abstractmethod
    def evaluate(self, z: np.ndarray) -> np.ndarray:
        """Evaluator on ambient coordinates, broadcasting over leading axes."""
        raise NotImplementedError

    def differential(self, p: np.ndarray) -> np.ndarray:
        return polarized_differential(self.evaluate, p)

    def pushforward(self, p: np.ndarray, x: np.ndarray) -> np.ndarray:
        return self.differential(p) @ np.asarray(x, dtype=float)

    @abstractmethod
    def vertical_basis(self, q: np.ndarray) -> np.ndarray:
        """Rows span the vertical space at q."""
        raise NotImplementedError

    @abstractmethod
    def same_fibre(self, p: np.ndarray, q: np.ndarray) -> bool:
        raise NotImplementedError

    def tangent_projector(self, q: np.ndarray) -> np.ndarray:
        return self.total.tangent_projector(q)

    def vertical_projector(self, q: np.ndarray) -> np.ndarray:
        """V = B^T (B eta B^T)^{-1} B eta for the rows B of vertical_basis(q)."""
        basis = self.vertical_basis(q)
        gram = (basis * self.eta) @ basis.T
        if np.linalg.cond(gram) > _DEGENERATE_CONDITION:
            raise FibrationException(f"{self.spec.label}: the induced fibre metric is degenerate")
        return basis.T @ np.linalg.solve(gram, basis * self.eta)

    def horizontal_projector(self, q: np.ndarray) -> np.ndarray:
        return self.tangent_projector(q) - self.vertical_projector(q)

    def vertical_space(self, p: np.ndarray) -> OrthonormalFrame:
        frame = indefinite_gram_schmidt(self.vertical_basis(p), self.eta)
        if len(frame) != self.fibre_dim or frame.signature.index != self.fibre_index:
            raise FibrationException(f"{self.spec.label}: vertical frame has signature {frame.signature}, "
                                     f"expected dimension {self.fibre_dim} and index {self.fibre_index}")
        return frame

    def horizontal_space(self, p: np.ndarray) -> OrthonormalFrame:
        projector = self.horizontal_projector(p)
        frame = indefinite_gram_schmidt(list(projector.T), self.eta, max_vectors=self.base_dim)
        if len(frame) != self.base_dim:
            raise FibrationException(f"{self.spec.label}: horizontal space has dimension {len(frame)}, "
                                     f"expected {self.base_dim}")
        return frame

    def random_point(self, rng: np.random.Generator) -> np.ndarray:
        return self.total.random_point(rng)

    def random_horizontal(self, rng: np.random.Generator, p: np.ndarray) -> np.ndarray:
        return self.horizontal_projector(p) @ rng.normal(size=self.total.ambient_dim)

    def random_vertical(self, rng: np.random.Generator, p: np.ndarray) -> np.ndarray:
        return rng.normal(size=self.fibre_dim) @ self.vertical_basis(p)

    def fibre_point(self, p: np.ndarray, v: np.ndarray, s: float) -> np.ndarray:
        """Point at parameter s on the total-space geodesic launched from p along the vertical vector v."""
        return self.total.reproject(self.total.geodesic_coords(p, v, s))

    def fibre_parameter_range(self, v: np.ndarray):
        """[0, 2 pi] along closed timelike fibre geodesics, [-3, 3] along non-compact ones."""
        if float(self.total.inner(v, v)) < 0:
            return 0.0, 2.0 * np.pi
        return -NONCOMPACT_FIBRE_RANGE, NONCOMPACT_FIBRE_RANGE

    def __repr__(self):
        return f"{type(self).__name__}({self.spec.label})"
