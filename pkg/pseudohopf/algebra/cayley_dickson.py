"""
Array-level Cayley-Dickson arithmetic.

All functions act on the last axis and broadcast over leading axes, so a whole batch of samples is multiplied
in one call. They only use +, -, * and slicing: integer and Fraction (object) arrays give exact results.
"""
import numpy as np

from typing import Sequence

from .algebra_tag import AlgebraTag, STANDARD_CONVENTION


def conjugate(x: np.ndarray) -> np.ndarray:
    x = np.asarray(x)
    mask = -np.ones(x.shape[-1], dtype=int)
    mask[0] = 1
    return x * mask


def _multiply(x: np.ndarray, y: np.ndarray, signs: Sequence[int], convention: str) -> np.ndarray:
    if len(signs) == 0:
        return x * y
    half = x.shape[-1] // 2
    a, b = x[..., :half], x[..., half:]
    c, e = y[..., :half], y[..., half:]
    inner_signs, gamma = signs[:-1], signs[-1]
    if convention == STANDARD_CONVENTION:
        first = _multiply(a, c, inner_signs, convention) + gamma * _multiply(conjugate(e), b, inner_signs,
                                                                             convention)
        second = _multiply(e, a, inner_signs, convention) + _multiply(b, conjugate(c), inner_signs, convention)
    else:
        first = _multiply(a, c, inner_signs, convention) + gamma * _multiply(b, conjugate(e), inner_signs,
                                                                             convention)
        second = _multiply(conjugate(a), e, inner_signs, convention) + _multiply(c, b, inner_signs, convention)
    first, second = np.broadcast_arrays(first, second)
    return np.concatenate([first, second], axis=-1)


def multiply(tag: AlgebraTag, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return _multiply(np.asarray(x), np.asarray(y), tuple(tag.doubling_signs), tag.convention)


def norm_form(tag: AlgebraTag, x: np.ndarray) -> np.ndarray:
    x = np.asarray(x)
    return np.sum(tag.norm_signs * x * x, axis=-1)


def inner(tag: AlgebraTag, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Polarization of the norm form: (N(x+y) - N(x) - N(y)) / 2."""
    return np.sum(tag.norm_signs * np.asarray(x) * np.asarray(y), axis=-1)


def basis_element(tag: AlgebraTag, index: int, dtype=float) -> np.ndarray:
    element = np.zeros(tag.dim, dtype=dtype)
    element[index] = 1
    return element


def left_multiplication_matrix(tag: AlgebraTag, u: np.ndarray) -> np.ndarray:
    """Matrix of x -> u x."""
    return np.stack([multiply(tag, u, basis_element(tag, j)) for j in range(tag.dim)], axis=-1)


def right_multiplication_matrix(tag: AlgebraTag, u: np.ndarray) -> np.ndarray:
    """Matrix of x -> x u."""
    return np.stack([multiply(tag, basis_element(tag, j), u) for j in range(tag.dim)], axis=-1)
