from __future__ import annotations

import numpy as np

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .fibration_id import FibrationId
from .fibration_exception import FibrationException
from .fibration_spec import FibreDescriptor, FibrationSpec, QuotientBase, TargetKind
from .quotient_submersion import QuotientSubmersion, quotient_spec
from .submersion import Submersion

from ..algebra import AlgebraName


@dataclass(frozen=True)
class SubalgebraSplit:
    """
    Identification of one K-coordinate z = (c1, ..., c4) with sub-algebra coordinates.

    Each entry lists the K-coefficients forming one sub-algebra component and their sign multipliers, e.g.
    C in H: z = a + b j gives a = (c1, c2) and conj(b) = (c3, -c4).
    """
    sub_algebra: AlgebraName
    components: Tuple[Tuple[Tuple[int, int], Tuple[int, int]], ...]


@dataclass(frozen=True)
class CompositeData:
    outer: AlgebraName
    inner: AlgebraName
    inner_acting: Tuple[int, ...]
    composite_acting: Tuple[int, ...]
    fibre: FibreDescriptor
    split: SubalgebraSplit


_COMPLEX_SPLIT = SubalgebraSplit(AlgebraName.C, (((0, 1), (1, 1)), ((2, 3), (1, -1))))
_PARA_COMPLEX_SPLIT = SubalgebraSplit(AlgebraName.A, (((0, 2), (1, 1)), ((1, 3), (1, 1))))

COMPOSITES: Dict[FibrationId, CompositeData] = {
    FibrationId.pi_CH: CompositeData(outer=AlgebraName.H, inner=AlgebraName.C, inner_acting=(1,),
                                     composite_acting=(2, 3),
                                     fibre=FibreDescriptor(dim=2, index=2, model="CH^1_1"), split=_COMPLEX_SPLIT),
    FibrationId.pi_CB: CompositeData(outer=AlgebraName.B, inner=AlgebraName.C, inner_acting=(1,),
                                     composite_acting=(2, 3),
                                     fibre=FibreDescriptor(dim=2, index=0, model="CH^1"), split=_COMPLEX_SPLIT),
    FibrationId.pi_AB: CompositeData(outer=AlgebraName.B, inner=AlgebraName.A, inner_acting=(2,),
                                     composite_acting=(1, 3),
                                     fibre=FibreDescriptor(dim=2, index=1, model="AP^1"),
                                     split=_PARA_COMPLEX_SPLIT),
}


def composite_spec(fibration_id: FibrationId, m: int, t: int = 0) -> FibrationSpec:
    data = COMPOSITES[fibration_id]
    outer_base = QuotientBase(algebra=data.outer, m=m, t=0 if data.outer == AlgebraName.B else t)
    total_t = 0
    if data.inner == AlgebraName.C:
        total_t = 2 * t + 1 if data.outer == AlgebraName.H else m
    total = QuotientBase(algebra=data.inner, m=2 * m + 1, t=total_t)
    parameters = (("m", m),) if data.outer == AlgebraName.B else (("m", m), ("t", t))
    return FibrationSpec(id=fibration_id, total=total, base=outer_base, fibre=data.fibre,
                         target_kind=TargetKind.quotient,
                         evaluator=f"projector:{data.outer.name}/{data.inner.name}", parameters=parameters)


class CompositeSubmersion(Submersion):
    """
    theta : K'H^{2m+1} -> K H^m for a sub-algebra K' of K, computed upstairs on the quadric of pi_K.

    A point of the total space is represented by a point z of the pi_K quadric, i.e. by the K'-orbit through z.
    Tangent vectors are pi_K'-horizontal vectors at z; the theta-vertical ones are z e_j for the imaginary
    units of K orthogonal to K'.
    """

    def __init__(self, fibration_id: FibrationId, m: int, t: int = 0):
        if fibration_id not in COMPOSITES:
            raise FibrationException(f"{fibration_id} is not a composite fibration")
        data = COMPOSITES[fibration_id]
        self.data = data
        outer_t = m if data.outer == AlgebraName.B else t
        self.outer = QuotientSubmersion(data.outer, m, outer_t)
        self.inner = QuotientSubmersion(data.outer, m, outer_t, acting=data.inner_acting,
                                        spec=self._inner_spec(m, t))
        super().__init__(spec=composite_spec(fibration_id, m, t), total=self.outer.total)

    def _inner_spec(self, m: int, t: int) -> FibrationSpec:
        if self.data.inner == AlgebraName.A:
            return quotient_spec(AlgebraName.A, 2 * m + 1)
        inner_t = 2 * t + 1 if self.data.outer == AlgebraName.H else m
        return quotient_spec(AlgebraName.C, 2 * m + 1, inner_t)

    @property
    def is_composite(self) -> bool:
        return True

    @property
    def ambient_submersion(self) -> Submersion:
        return self.outer

    @property
    def layout(self):
        return self.outer.layout

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        return self.outer.evaluate(z)

    def vertical_basis(self, q: np.ndarray) -> np.ndarray:
        return np.array([self.outer.right_multiply(q, self.outer.unit(j)) for j in self.data.composite_acting])

    def tangent_projector(self, q: np.ndarray) -> np.ndarray:
        return self.inner.horizontal_projector(q)

    def same_fibre(self, p: np.ndarray, q: np.ndarray) -> bool:
        return self.outer.same_fibre(p, q)

    def fibre_point(self, p: np.ndarray, v: np.ndarray, s: float) -> np.ndarray:
        return self.outer.fibre_point(p, v, s)

    def standalone_inner(self) -> QuotientSubmersion:
        inner_spec = self.inner.spec
        return QuotientSubmersion(self.data.inner, inner_spec.base.m, inner_spec.parameter("t"))

    def _sub_component_slots(self) -> List[Tuple[int, int]]:
        """(K-component, split entry) per standalone component, negatives first."""
        slots = [(i, s) for i in range(self.layout.components) for s in range(len(self.data.split.components))]
        nu = self.layout.algebra.norm_signs
        signs = [self.layout.component_signs[i] * nu[self.data.split.components[s][0][0]] for i, s in slots]
        return [slots[k] for k in np.argsort(signs, kind="stable")]

    def to_standalone(self, z: np.ndarray) -> np.ndarray:
        """Ambient coordinates of the standalone inner quotient for the upstairs point z."""
        components = self.layout.to_components(z)
        standalone = self.standalone_inner()
        sub = np.empty(components.shape[:-2] + (standalone.layout.components, 2))
        for slot, (i, s) in enumerate(self._sub_component_slots()):
            indices, multipliers = self.data.split.components[s]
            sub[..., slot, :] = components[..., i, list(indices)] * np.asarray(multipliers)
        return standalone.layout.from_components(sub)

    def from_standalone(self, w: np.ndarray) -> np.ndarray:
        standalone = self.standalone_inner()
        sub = standalone.layout.to_components(w)
        components = np.empty(sub.shape[:-2] + (self.layout.components, self.layout.algebra.dim))
        for slot, (i, s) in enumerate(self._sub_component_slots()):
            indices, multipliers = self.data.split.components[s]
            components[..., i, list(indices)] = sub[..., slot, :] * np.asarray(multipliers)
        return self.layout.from_components(components)


def compose(outer: FibrationSpec, inner: FibrationSpec) -> FibrationSpec:
    """pi_K = theta o pi_K' at spec level; the base of `inner` must be the total of `outer`."""
    if not outer.is_composite or not isinstance(inner.base, QuotientBase) or inner.base != outer.total:
        raise FibrationException(f"Cannot compose {outer.label} after {inner.label}: "
                                 f"base {inner.base.name} is not the total space {outer.total_name}")
    base = outer.base
    composed = quotient_spec(base.algebra, base.m, base.t)
    if (composed.fibre.dim != inner.fibre.dim + outer.fibre.dim
            or composed.fibre.index != inner.fibre.index + outer.fibre.index
            or composed.total != inner.total):
        raise FibrationException(f"Composition of {outer.label} and {inner.label} does not match "
                                 f"{composed.label}")
    return composed


class ComposedMap:
    """theta o pi_inner evaluated on ambient coordinates of the standalone inner quotient."""

    def __init__(self, outer: CompositeSubmersion, inner: QuotientSubmersion):
        if inner.spec != outer.inner.spec:
            raise FibrationException(f"{inner.spec.label} is not the inner quotient of {outer.spec.label}")
        self.outer = outer
        self.inner = inner
        self.spec = compose(outer.spec, inner.spec)

    def evaluate(self, w: np.ndarray) -> np.ndarray:
        return self.outer.evaluate(self.outer.from_standalone(w))
