from __future__ import annotations

import numpy as np

from enum import Enum

from ..algebra import AlgebraTag, multiply, conjugate
from ..algebra.cayley_dickson import norm_form
from ..spaces import PseudoHyperbolicSpace
from ..utilities.constants import BASE_CURVATURE, TOTAL_CURVATURE


class HopfVariant(Enum):
    phi1 = 1
    phi2 = 2

    @staticmethod
    def from_string(string: str) -> HopfVariant:
        return {variant.name: variant for variant in HopfVariant}[string]

    def __str__(self):
        return self.name


def _stable_negative_first(signs: np.ndarray) -> np.ndarray:
    return np.argsort(signs, kind="stable")


class HopfConstruction:
    """
    phi1(x, y) = ((N(x) - N(y))/2, conj(x) y) and phi2(x, y) = ((N(x) + N(y))/2, conj(x) y) on F x F.

    Natural coordinates interleave the two factors as (x1, y1, ..., xd, yd); the natural target order is
    (t, w1, ..., wd). Both are stable-sorted so that the negative directions of the ambient form come first,
    giving the ambient coordinates of the domain and target quadrics.
    """

    def __init__(self, algebra: AlgebraTag, variant: HopfVariant):
        self.algebra = algebra
        self.variant = variant
        nu = algebra.norm_signs
        second_factor = -nu if variant == HopfVariant.phi1 else nu

        natural_signs = np.empty(2 * algebra.dim, dtype=int)
        natural_signs[0::2] = -nu
        natural_signs[1::2] = second_factor
        self.domain_permutation = _stable_negative_first(natural_signs)
        self.domain_signs = natural_signs[self.domain_permutation]

        target_signs = np.concatenate([[-1], second_factor])
        self.target_permutation = _stable_negative_first(target_signs)
        self.target_signs = target_signs[self.target_permutation]

        self.domain = PseudoHyperbolicSpace(m=2 * algebra.dim - 1, t=int(np.sum(self.domain_signs < 0)) - 1,
                                            c=TOTAL_CURVATURE)
        self.target = PseudoHyperbolicSpace(m=algebra.dim, t=int(np.sum(self.target_signs < 0)) - 1,
                                            c=BASE_CURVATURE)

    @property
    def name(self) -> str:
        return f"hopf:{self.variant}:{self.algebra.name.name}:{self.algebra.convention}"

    def to_natural(self, z: np.ndarray) -> np.ndarray:
        z = np.asarray(z, dtype=float)
        natural = np.empty_like(z)
        natural[..., self.domain_permutation] = z
        return natural

    def from_natural(self, natural: np.ndarray) -> np.ndarray:
        return np.asarray(natural, dtype=float)[..., self.domain_permutation]

    def split(self, z: np.ndarray):
        natural = self.to_natural(z)
        return natural[..., 0::2], natural[..., 1::2]

    def join(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x, y = np.broadcast_arrays(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        natural = np.empty(x.shape[:-1] + (2 * self.algebra.dim,))
        natural[..., 0::2] = x
        natural[..., 1::2] = y
        return self.from_natural(natural)

    def evaluate_natural(self, z: np.ndarray) -> np.ndarray:
        """(t, w1, ..., wd) in natural target order."""
        x, y = self.split(z)
        if self.variant == HopfVariant.phi1:
            t = (norm_form(self.algebra, x) - norm_form(self.algebra, y)) / 2.0
        else:
            t = (norm_form(self.algebra, x) + norm_form(self.algebra, y)) / 2.0
        w = multiply(self.algebra, conjugate(x), y)
        return np.concatenate([np.asarray(t)[..., None], w], axis=-1)

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        return self.evaluate_natural(z)[..., self.target_permutation]
