from .geometry_exception import GeometryException
from .field_evaluator import (FieldKind, FieldEvaluator, tangential_constant_field, position_field,
                              basic_extension, fibre_tangent_field)
from .connection import richardson_derivative, covariant_derivative, constant_field_derivative
from .point_geometry import PointGeometry
from .curvature import (CurvatureValue, constant_curvature_form, constant_curvature_R, clifford_curvature,
                        base_curvature_model, fibre_curvature_model)
from .sampling import PointSample, sample_points, build_report
from .tensor_identities import a_tensor_checks
from .oneill import oneill_residuals
from .jacobi_operator import JacobiOperator, jacobi_operator, predicted_spectrum, predicted_eigenvalues
from .special_osserman import special_osserman_check
from .clifford_structure import clifford_structure_check, clifford_matrices, clifford_signs
from .special_basis import (SpecialBasis, special_basis, special_basis_check, expected_fibre_index,
                            distinguished_vertical)
from .horizontal_lift_curve import BaseCurve, LiftedCurve, horizontal_lift_curve, lift_checks

__all__ = [
    "GeometryException",
    "FieldKind",
    "FieldEvaluator",
    "tangential_constant_field",
    "position_field",
    "basic_extension",
    "fibre_tangent_field",
    "richardson_derivative",
    "covariant_derivative",
    "constant_field_derivative",
    "PointGeometry",
    "CurvatureValue",
    "constant_curvature_form",
    "constant_curvature_R",
    "clifford_curvature",
    "base_curvature_model",
    "fibre_curvature_model",
    "PointSample",
    "sample_points",
    "build_report",
    "a_tensor_checks",
    "oneill_residuals",
    "JacobiOperator",
    "jacobi_operator",
    "predicted_spectrum",
    "predicted_eigenvalues",
    "special_osserman_check",
    "clifford_structure_check",
    "clifford_matrices",
    "clifford_signs",
    "SpecialBasis",
    "special_basis",
    "special_basis_check",
    "distinguished_vertical",
    "expected_fibre_index",
    "BaseCurve",
    "LiftedCurve",
    "horizontal_lift_curve",
    "lift_checks",
]
