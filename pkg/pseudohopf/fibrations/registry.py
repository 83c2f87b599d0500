from __future__ import annotations

import json

from typing import Any, Dict, List, Optional, Tuple

from .fibration_id import FibrationId
from .fibration_spec import FibrationSpec
from .fibration_exception import FibrationException
from .hopf_construction import HopfConstruction, HopfVariant
from .hopf_submersion import HopfSubmersion
from .quotient_submersion import QuotientSubmersion
from .composite_submersion import CompositeSubmersion
from .pi9_polynomial import selected_split_octonion_convention
from .submersion import Submersion

from ..algebra import AlgebraName, get_algebra
from ..utilities.constants import DEFAULT_QUOTIENT_DIMENSION

HOPF_MAPS: Dict[FibrationId, Tuple[AlgebraName, HopfVariant]] = {
    FibrationId.pi1: (AlgebraName.C, HopfVariant.phi1),
    FibrationId.pi2: (AlgebraName.H, HopfVariant.phi1),
    FibrationId.pi3: (AlgebraName.O, HopfVariant.phi1),
    FibrationId.pi4: (AlgebraName.C, HopfVariant.phi2),
    FibrationId.pi5: (AlgebraName.H, HopfVariant.phi2),
    FibrationId.pi6: (AlgebraName.O, HopfVariant.phi2),
    FibrationId.pi7: (AlgebraName.A, HopfVariant.phi1),
    FibrationId.pi8: (AlgebraName.B, HopfVariant.phi1),
    FibrationId.pi9: (AlgebraName.Oprime, HopfVariant.phi1),
}

# phi2 on the split algebras, verified next to the phi1 map of the same shape
SPLIT_PHI2_MAPS: Dict[FibrationId, AlgebraName] = {
    FibrationId.pi7: AlgebraName.A,
    FibrationId.pi8: AlgebraName.B,
    FibrationId.pi9: AlgebraName.Oprime,
}

_QUOTIENT_ALGEBRAS = {
    FibrationId.pi_C: AlgebraName.C,
    FibrationId.pi_A: AlgebraName.A,
    FibrationId.pi_H: AlgebraName.H,
    FibrationId.pi_B: AlgebraName.B,
}


def hopf_construction(algebra: AlgebraName, variant: HopfVariant) -> HopfConstruction:
    convention = selected_split_octonion_convention() if algebra == AlgebraName.Oprime else None
    tag = get_algebra(algebra) if convention is None else get_algebra(algebra, convention)
    return HopfConstruction(tag, variant)


def get_fibration(fibration_id: FibrationId, m: Optional[int] = None, t: Optional[int] = None) -> Submersion:
    """
    Build a catalogued fibration. Explicit Hopf maps ignore (m, t); quotients and composites default to
    m = DEFAULT_QUOTIENT_DIMENSION and t = 0.
    """
    if fibration_id in HOPF_MAPS:
        return HopfSubmersion(fibration_id, hopf_construction(*HOPF_MAPS[fibration_id]))
    m = DEFAULT_QUOTIENT_DIMENSION if m is None else m
    t = 0 if t is None else t
    if m < 1 or not 0 <= t <= m:
        raise FibrationException(f"Invalid parameters m={m}, t={t} for {fibration_id}")
    if fibration_id in _QUOTIENT_ALGEBRAS:
        return QuotientSubmersion(_QUOTIENT_ALGEBRAS[fibration_id], m, t)
    if fibration_id in FibrationId.composite_fibrations():
        return CompositeSubmersion(fibration_id, m, t)
    raise FibrationException(f"Unknown fibration id: {fibration_id}")


def split_phi2_fibration(fibration_id: FibrationId) -> HopfSubmersion:
    if fibration_id not in SPLIT_PHI2_MAPS:
        raise FibrationException(f"{fibration_id} has no phi2 counterpart over a split algebra")
    construction = hopf_construction(SPLIT_PHI2_MAPS[fibration_id], HopfVariant.phi2)
    return HopfSubmersion(None, construction, name=f"{fibration_id.name}_phi2")


def get_fibration_spec(fibration_id: FibrationId, m: Optional[int] = None, t: Optional[int] = None) -> FibrationSpec:
    return get_fibration(fibration_id, m, t).spec


def fibration_instances(fibration_id: FibrationId, m: int = DEFAULT_QUOTIENT_DIMENSION) -> List[Tuple[int, int]]:
    """Parameter pairs (m, t) verified for one id: every index 0 <= t <= m where t is a parameter."""
    if fibration_id in HOPF_MAPS:
        return [(0, 0)]
    if fibration_id in FibrationId.with_index_parameter():
        return [(m, t) for t in range(m + 1)]
    return [(m, 0)]


def fibration_submersions(fibration_id: FibrationId, m: int = DEFAULT_QUOTIENT_DIMENSION) -> List[Submersion]:
    """Every verified submersion of one id: its instances, then the split phi2 counterpart where there is one."""
    submersions = [get_fibration(fibration_id, *instance) for instance in fibration_instances(fibration_id, m)]
    if fibration_id in SPLIT_PHI2_MAPS:
        submersions.append(split_phi2_fibration(fibration_id))
    return submersions


def export_fibration_catalog(m: int = DEFAULT_QUOTIENT_DIMENSION) -> List[Dict[str, Any]]:
    return [get_fibration_spec(fibration_id, *instance).to_dict()
            for fibration_id in FibrationId.all()
            for instance in fibration_instances(fibration_id, m)]


def export_fibration_catalog_json(m: int = DEFAULT_QUOTIENT_DIMENSION, indent: Optional[int] = 2) -> str:
    return json.dumps(export_fibration_catalog(m), indent=indent)
