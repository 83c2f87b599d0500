from .fibration_id import FibrationId
from .fibration_exception import FibrationException
from .fibration_spec import (FibrationSpec, ExplicitQuadric, QuotientBase, FibreDescriptor, TargetKind,
                             space_name)
from .quadratic_map import polarized_differential, numerical_rank
from .hopf_construction import HopfConstruction, HopfVariant
from .pi9_polynomial import (PI9_COMPONENTS, pi9_coefficients, evaluate_pi9_polynomial, pi9_deviations,
                             audit_split_octonion_convention, selected_split_octonion_convention)
from .submersion import Submersion
from .hopf_submersion import HopfSubmersion, hopf_spec
from .quotient_submersion import QuotientSubmersion, QuotientPoint, ComponentLayout, quotient_spec
from .composite_submersion import CompositeSubmersion, ComposedMap, compose, composite_spec
from .registry import (HOPF_MAPS, SPLIT_PHI2_MAPS, get_fibration, get_fibration_spec, fibration_instances,
                       fibration_submersions, split_phi2_fibration, hopf_construction, export_fibration_catalog,
                       export_fibration_catalog_json)

__all__ = [
    "FibrationId",
    "FibrationException",
    "FibrationSpec",
    "ExplicitQuadric",
    "QuotientBase",
    "FibreDescriptor",
    "TargetKind",
    "space_name",
    "polarized_differential",
    "numerical_rank",
    "HopfConstruction",
    "HopfVariant",
    "PI9_COMPONENTS",
    "pi9_coefficients",
    "evaluate_pi9_polynomial",
    "pi9_deviations",
    "audit_split_octonion_convention",
    "selected_split_octonion_convention",
    "Submersion",
    "HopfSubmersion",
    "hopf_spec",
    "QuotientSubmersion",
    "QuotientPoint",
    "ComponentLayout",
    "quotient_spec",
    "CompositeSubmersion",
    "ComposedMap",
    "compose",
    "composite_spec",
    "HOPF_MAPS",
    "SPLIT_PHI2_MAPS",
    "get_fibration",
    "get_fibration_spec",
    "fibration_instances",
    "fibration_submersions",
    "split_phi2_fibration",
    "hopf_construction",
    "export_fibration_catalog",
    "export_fibration_catalog_json",
]
