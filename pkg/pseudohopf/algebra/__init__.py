from typing import Dict

from .algebra_exception import AlgebraException
from .algebra_tag import (AlgebraTag, AlgebraName, REALS, STANDARD_CONVENTION, MIRROR_CONVENTION,
                          cayley_dickson_double)
from .algebra_element import AlgebraElement, mul, conj, norm_form, inner
from .multiplication_table import MultiplicationTable, build_multiplication_table, associator_witness
from .cayley_dickson import (multiply, conjugate, basis_element, left_multiplication_matrix,
                             right_multiplication_matrix)

COMPLEX = cayley_dickson_double(REALS, -1)
PARA_COMPLEX = cayley_dickson_double(REALS, 1)
QUATERNIONS = cayley_dickson_double(COMPLEX, -1)
PARA_QUATERNIONS = cayley_dickson_double(COMPLEX, 1)
OCTONIONS = cayley_dickson_double(QUATERNIONS, -1)
SPLIT_OCTONIONS = cayley_dickson_double(QUATERNIONS, 1)

__ALGEBRAS: Dict[AlgebraName, AlgebraTag] = {
    AlgebraName.C: COMPLEX,
    AlgebraName.A: PARA_COMPLEX,
    AlgebraName.H: QUATERNIONS,
    AlgebraName.B: PARA_QUATERNIONS,
    AlgebraName.O: OCTONIONS,
    AlgebraName.Oprime: SPLIT_OCTONIONS,
}


def get_algebra(name: AlgebraName, convention: str = STANDARD_CONVENTION) -> AlgebraTag:
    tag = __ALGEBRAS[name]
    return tag if convention == tag.convention else tag.with_convention(convention)


def get_available_algebras():
    return list(__ALGEBRAS.values())


__all__ = [
    "AlgebraException",
    "AlgebraTag",
    "AlgebraName",
    "AlgebraElement",
    "MultiplicationTable",
    "REALS",
    "COMPLEX",
    "PARA_COMPLEX",
    "QUATERNIONS",
    "PARA_QUATERNIONS",
    "OCTONIONS",
    "SPLIT_OCTONIONS",
    "STANDARD_CONVENTION",
    "MIRROR_CONVENTION",
    "cayley_dickson_double",
    "get_algebra",
    "get_available_algebras",
    "mul",
    "conj",
    "norm_form",
    "inner",
    "multiply",
    "conjugate",
    "basis_element",
    "left_multiplication_matrix",
    "right_multiplication_matrix",
    "build_multiplication_table",
    "associator_witness",
]
