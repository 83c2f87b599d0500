from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import Any, Dict, Optional, Union

from .signature import Signature
from .reprojection import ReprojectionCounter
from .spaces_exception import SpaceException

from ..utilities.constants import (MEMBERSHIP_TOLERANCE, REPROJECTION_THRESHOLD, SAMPLE_SPREAD)

_NULL_GEODESIC_THRESHOLD = 1e-12


@dataclass(frozen=True)
class PseudoHyperbolicSpace:
    """
    The quadric H^m_t(c) = {x : <x,x> = 1/c} in R^{m+1}_{t+1}, of constant sectional curvature c < 0.

    Ambient coordinates list the t+1 negative directions first.
    """
    m: int
    t: int
    c: float = -1.0

    def __post_init__(self):
        if self.c >= 0:
            raise SpaceException(f"Pseudo-hyperbolic spaces need c < 0, got {self.c}")
        if not 0 <= self.t <= self.m:
            raise SpaceException(f"Invalid index {self.t} for H^{self.m}")

    @property
    def ambient_signature(self) -> Signature:
        return Signature(dim=self.m + 1, index=self.t + 1)

    @property
    def ambient_dim(self) -> int:
        return self.m + 1

    @property
    def eta(self) -> np.ndarray:
        return self.ambient_signature.metric_diagonal()

    @property
    def space_id(self) -> str:
        return f"H^{self.m}_{self.t}({self.c:g})"

    def _check_length(self, *vectors):
        for vector in vectors:
            if np.shape(vector)[-1] != self.ambient_dim:
                raise SpaceException(f"Vector of length {np.shape(vector)[-1]} does not live in "
                                     f"R^{self.ambient_dim} of {self.space_id}")

    def inner(self, x: np.ndarray, y: np.ndarray) -> Union[float, np.ndarray]:
        x, y = np.asarray(x), np.asarray(y)
        self._check_length(x, y)
        return np.sum(self.eta * x * y, axis=-1)

    def membership_defect(self, x: np.ndarray) -> Union[float, np.ndarray]:
        return np.abs(self.inner(x, x) - 1.0 / self.c)

    def is_member(self, x: np.ndarray, tolerance: float = MEMBERSHIP_TOLERANCE) -> bool:
        return bool(np.all(self.membership_defect(x) <= tolerance))

    def normalize(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        scale = self.c * self.inner(x, x)
        if np.any(scale <= 0):
            raise SpaceException(f"Cannot scale a vector of the wrong causal type onto {self.space_id}")
        return x / np.sqrt(scale)[..., None] if np.ndim(scale) else x / np.sqrt(scale)

    def reproject(self, x: np.ndarray, counter: Optional[ReprojectionCounter] = None) -> np.ndarray:
        """Radial re-projection, only when the drift exceeds REPROJECTION_THRESHOLD."""
        if self.membership_defect(x) <= REPROJECTION_THRESHOLD:
            return x
        if counter is not None:
            counter.record()
        return self.normalize(x)

    def tangent_projector(self, p: np.ndarray) -> np.ndarray:
        """P = I - p p^T eta / <p,p>, the orthogonal projection onto T_p."""
        p = np.asarray(p, dtype=float)
        return np.eye(self.ambient_dim) - np.outer(p, self.eta * p) / self.inner(p, p)

    def project_to_tangent(self, p: np.ndarray, v: np.ndarray) -> np.ndarray:
        return np.asarray(v) - (self.inner(p, v) / self.inner(p, p)) * np.asarray(p)

    def is_tangent(self, p: np.ndarray, v: np.ndarray, tolerance: float = MEMBERSHIP_TOLERANCE) -> bool:
        scale = max(1.0, float(np.linalg.norm(p) * np.linalg.norm(v)))
        return abs(float(self.inner(p, v))) <= tolerance * scale

    def random_point(self, rng: np.random.Generator, spread: float = SAMPLE_SPREAD) -> np.ndarray:
        positive = rng.normal(scale=spread, size=self.m - self.t)
        direction = rng.normal(size=self.t + 1)
        direction /= np.linalg.norm(direction)
        negative = np.sqrt(1.0 + positive @ positive) * direction
        return np.concatenate([negative, positive]) / np.sqrt(-self.c)

    def random_tangent(self, rng: np.random.Generator, p: np.ndarray) -> np.ndarray:
        return self.project_to_tangent(p, rng.normal(size=self.ambient_dim))

    def geodesic_coords(self, p: np.ndarray, v: np.ndarray, t: Union[float, np.ndarray],
                        check: bool = True) -> np.ndarray:
        """
        gamma'' = kappa gamma with kappa = -c <v,v>: cosh/sinh for kappa > 0, cos/sin for kappa < 0,
        the straight line for null v. Array-valued t gives one row per parameter.
        """
        p, v = np.asarray(p, dtype=float), np.asarray(v, dtype=float)
        if check and not self.is_tangent(p, v, tolerance=1e-10):
            raise SpaceException(f"Vector is not tangent to {self.space_id} at the given point")
        t = np.asarray(t, dtype=float)
        kappa = -self.c * float(self.inner(v, v))
        if abs(kappa) < _NULL_GEODESIC_THRESHOLD:
            first, second = np.ones_like(t), t
        elif kappa > 0:
            root = np.sqrt(kappa)
            first, second = np.cosh(root * t), np.sinh(root * t) / root
        else:
            root = np.sqrt(-kappa)
            first, second = np.cos(root * t), np.sin(root * t) / root
        return first[..., None] * p + second[..., None] * v

    def geodesic_velocity(self, p: np.ndarray, v: np.ndarray, t: float) -> np.ndarray:
        kappa = -self.c * float(self.inner(v, v))
        if abs(kappa) < _NULL_GEODESIC_THRESHOLD:
            return np.asarray(v, dtype=float)
        if kappa > 0:
            root = np.sqrt(kappa)
            return root * np.sinh(root * t) * p + np.cosh(root * t) * v
        root = np.sqrt(-kappa)
        return -root * np.sin(root * t) * p + np.cos(root * t) * v

    def point(self, coords: np.ndarray) -> AmbientPoint:
        return AmbientPoint(self, coords)

    def to_dict(self) -> Dict[str, Any]:
        return {"m": self.m, "t": self.t, "c": self.c, "space": self.space_id}


@dataclass(frozen=True, eq=False)
class AmbientPoint:
    """Coordinates of a point pinned to a quadric."""
    space: PseudoHyperbolicSpace
    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float)
        self.space._check_length(coords)
        scale = max(1.0, float(coords @ coords))
        if self.space.membership_defect(coords) > MEMBERSHIP_TOLERANCE * scale:
            raise SpaceException(f"Point is off {self.space.space_id}: "
                                 f"defect {self.space.membership_defect(coords):.3e}")
        object.__setattr__(self, "coords", coords)

    def to_dict(self) -> Dict[str, Any]:
        return {"coords": self.coords.tolist(), "space": self.space.space_id}


@dataclass(frozen=True, eq=False)
class TangentVector:
    base: AmbientPoint
    vec: np.ndarray

    def __post_init__(self):
        vec = np.asarray(self.vec, dtype=float)
        self.base.space._check_length(vec)
        if not self.base.space.is_tangent(self.base.coords, vec):
            raise SpaceException("Vector is not tangent at its base point")
        object.__setattr__(self, "vec", vec)

    @classmethod
    def projected(cls, base: AmbientPoint, vec: np.ndarray) -> TangentVector:
        return cls(base, base.space.project_to_tangent(base.coords, vec))

    @property
    def norm_sq(self) -> float:
        return float(self.base.space.inner(self.vec, self.vec))

    def to_dict(self) -> Dict[str, Any]:
        return {"vec": self.vec.tolist(), "base": self.base.to_dict()}


def inner(space: PseudoHyperbolicSpace, x: np.ndarray, y: np.ndarray):
    return space.inner(x, y)


def geodesic(p: AmbientPoint, v: TangentVector, t: float) -> AmbientPoint:
    if v.base is not p and not np.array_equal(v.base.coords, p.coords):
        raise SpaceException("Tangent vector is attached to a different point")
    coords = p.space.geodesic_coords(p.coords, v.vec, t)
    return AmbientPoint(p.space, p.space.reproject(coords))
