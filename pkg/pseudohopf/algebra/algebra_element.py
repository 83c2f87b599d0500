from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import Union

from .algebra_tag import AlgebraTag
from .algebra_exception import AlgebraException
from . import cayley_dickson


@dataclass(frozen=True, eq=False)
class AlgebraElement:
    """Coefficient vector over a tagged composition algebra."""
    tag: AlgebraTag
    coeffs: np.ndarray

    def __post_init__(self):
        coeffs = np.asarray(self.coeffs)
        if coeffs.shape != (self.tag.dim,):
            raise AlgebraException(f"{self.tag} elements need {self.tag.dim} coefficients, got shape {coeffs.shape}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def unit(cls, tag: AlgebraTag) -> AlgebraElement:
        return cls(tag, cayley_dickson.basis_element(tag, 0))

    @classmethod
    def basis(cls, tag: AlgebraTag, index: int, dtype=float) -> AlgebraElement:
        return cls(tag, cayley_dickson.basis_element(tag, index, dtype=dtype))

    @property
    def real(self):
        return self.coeffs[0]

    def _check_tag(self, other: AlgebraElement):
        if not isinstance(other, AlgebraElement):
            raise AlgebraException(f"Expected an AlgebraElement, got {type(other)}")
        if other.tag.doubling_signs != self.tag.doubling_signs or other.tag.convention != self.tag.convention:
            raise AlgebraException(f"Tag mismatch: {self.tag} ({self.tag.convention}) "
                                   f"vs {other.tag} ({other.tag.convention})")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_tag(other)
        return AlgebraElement(self.tag, self.coeffs + other.coeffs)

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        self._check_tag(other)
        return AlgebraElement(self.tag, self.coeffs - other.coeffs)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.tag, -self.coeffs)

    def __mul__(self, other: Union[AlgebraElement, float, int]) -> AlgebraElement:
        if isinstance(other, AlgebraElement):
            return mul(self, other)
        return AlgebraElement(self.tag, self.coeffs * other)

    def __rmul__(self, scalar: Union[float, int]) -> AlgebraElement:
        return AlgebraElement(self.tag, scalar * self.coeffs)

    def conj(self) -> AlgebraElement:
        return conj(self)

    def norm_form(self):
        return norm_form(self)

    def equals(self, other: AlgebraElement, atol: float = 0.0) -> bool:
        self._check_tag(other)
        return bool(np.all(np.abs(self.coeffs - other.coeffs) <= atol))

    def __repr__(self):
        return f"AlgebraElement({self.tag}, {self.coeffs.tolist()})"


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    x._check_tag(y)
    return AlgebraElement(x.tag, cayley_dickson.multiply(x.tag, x.coeffs, y.coeffs))


def conj(x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement(x.tag, cayley_dickson.conjugate(x.coeffs))


def norm_form(x: AlgebraElement):
    """N(z) = real part of conj(z) z."""
    return cayley_dickson.norm_form(x.tag, x.coeffs)


def inner(x: AlgebraElement, y: AlgebraElement):
    x._check_tag(y)
    return cayley_dickson.inner(x.tag, x.coeffs, y.coeffs)
