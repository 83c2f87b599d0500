from __future__ import annotations

import json

from enum import Enum
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Set, Tuple

from .admissibility import admissible

from ..algebra import AlgebraName
from ..fibrations import FibrationId, FibrationSpec, quotient_spec, composite_spec, get_fibration_spec


class ExistenceStatus(Enum):
    yes = 1
    no = 2
    out_of_scope_proof = 3

    def __str__(self):
        return self.name


SpecFactory = Callable[[int, int], FibrationSpec]


@dataclass(frozen=True)
class CatalogEntry:
    """
    One row of the classification: a family of submersions H^a_l -> B^n_s with fibre H^r_{r'}, or an
    annotated row that does not occur. `instantiate` builds the concrete spec for the family parameters.
    """
    key: str
    label: str
    total: str
    base: str
    r: int
    r_prime: Optional[int]
    fibre_model: str
    exists: ExistenceStatus
    notes: str = ""
    parameter_range: str = ""
    composite: bool = False
    has_t: bool = False
    fixed: Optional[FibrationId] = None
    instantiate: Optional[SpecFactory] = None
    invariants: Optional[Tuple[int, int, int, int]] = None
    total_dims: Optional[Tuple[int, int]] = None

    def instances(self, max_m: int) -> List[FibrationSpec]:
        if self.fixed is not None:
            return [get_fibration_spec(self.fixed)]
        if self.instantiate is None:
            return []
        return [self.instantiate(m, t)
                for m in range(1, max_m + 1)
                for t in (range(m + 1) if self.has_t else (0,))]

    def matches(self, spec: FibrationSpec) -> bool:
        return any(_same_shape(spec, instance) for instance in self.instances(max(spec.total_dim, 1)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "key": self.key,
            "label": self.label,
            "total": self.total,
            "base": self.base,
            "fibre": {"r": self.r, "r_prime": self.r_prime, "model": self.fibre_model},
            "parameters": self.parameter_range,
            "composite": self.composite,
            "exists": str(self.exists),
            "notes": self.notes,
        }


def _same_shape(spec: FibrationSpec, other: FibrationSpec) -> bool:
    return (spec.is_composite == other.is_composite and spec.total_dim == other.total_dim
            and spec.total_index == other.total_index and spec.invariants == other.invariants)


def _quotient(algebra: AlgebraName) -> SpecFactory:
    return lambda m, t: quotient_spec(algebra, m, t)


def _composite(fibration_id: FibrationId) -> SpecFactory:
    return lambda m, t: composite_spec(fibration_id, m, t)


_NO_SUBMERSION_NOTE = ("a submersion H^31_15 -> H^16_8(-4) would make the fibres carry a Clifford module structure "
                       "of dimension 128, which the horizontal space cannot host")
_CAYLEY_NOTE = ("the eigenspaces of the Jacobi operators of the Cayley planes are not spanned by A_X applied to a "
                "fibre frame; the planes are excluded as bases")

FAMILIES: Tuple[CatalogEntry, ...] = (
    CatalogEntry(key="a", label="pi_C", total="H^{2m+1}_{2t+1}", base="CH^m_t", r=1, r_prime=1,
                 fibre_model="H^1_1", exists=ExistenceStatus.yes, parameter_range="m >= 1, 0 <= t <= m",
                 has_t=True, instantiate=_quotient(AlgebraName.C)),
    CatalogEntry(key="b", label="pi_A", total="H^{2m+1}_m", base="AP^m", r=1, r_prime=0, fibre_model="H^1",
                 exists=ExistenceStatus.yes, parameter_range="m >= 1", instantiate=_quotient(AlgebraName.A)),
    CatalogEntry(key="c", label="pi_H", total="H^{4m+3}_{4t+3}", base="HH^m_t", r=3, r_prime=3,
                 fibre_model="H^3_3", exists=ExistenceStatus.yes, parameter_range="m >= 1, 0 <= t <= m",
                 has_t=True, instantiate=_quotient(AlgebraName.H)),
    CatalogEntry(key="d", label="pi_B", total="H^{4m+3}_{2m+1}", base="BP^m", r=3, r_prime=1, fibre_model="H^3_1",
                 exists=ExistenceStatus.yes, parameter_range="m >= 1", instantiate=_quotient(AlgebraName.B)),
    CatalogEntry(key="e", label="pi^1_O", total="H^15_15", base="H^8_8(-4)", r=7, r_prime=7, fibre_model="H^7_7",
                 exists=ExistenceStatus.yes, fixed=FibrationId.pi3),
    CatalogEntry(key="f", label="pi_O'", total="H^15_7", base="H^8_4(-4)", r=7, r_prime=3, fibre_model="H^7_3",
                 exists=ExistenceStatus.yes, fixed=FibrationId.pi9),
    CatalogEntry(key="g", label="pi^2_O", total="H^15_7", base="H^8(-4)", r=7, r_prime=7, fibre_model="H^7_7",
                 exists=ExistenceStatus.yes, fixed=FibrationId.pi6),
)

COMPOSITES: Tuple[CatalogEntry, ...] = (
    CatalogEntry(key="composite_a", label="pi_CH", total="CH^{2m+1}_{2t+1}", base="HH^m_t", r=2, r_prime=2,
                 fibre_model="CH^1_1", exists=ExistenceStatus.yes, parameter_range="m >= 1, 0 <= t <= m",
                 notes="pi_H = pi_CH o pi_C", composite=True, has_t=True,
                 instantiate=_composite(FibrationId.pi_CH)),
    CatalogEntry(key="composite_b", label="pi_CB", total="CH^{2m+1}_m", base="BP^m", r=2, r_prime=0,
                 fibre_model="CH^1", exists=ExistenceStatus.yes, parameter_range="m >= 1",
                 notes="pi_B = pi_CB o pi_C", composite=True, instantiate=_composite(FibrationId.pi_CB)),
    CatalogEntry(key="composite_c", label="pi_AB", total="AP^{2m+1}", base="BP^m", r=2, r_prime=1,
                 fibre_model="AP^1", exists=ExistenceStatus.yes, parameter_range="m >= 1",
                 notes="pi_B = pi_AB o pi_A", composite=True, instantiate=_composite(FibrationId.pi_AB)),
)

NONEXISTENT: Tuple[CatalogEntry, ...] = (
    CatalogEntry(key="no_h16_8", label="-", total="H^31_15", base="H^16_8(-4)", r=15, r_prime=7,
                 fibre_model="H^15_7", exists=ExistenceStatus.no, notes=_NO_SUBMERSION_NOTE,
                 invariants=(16, 8, 15, 7), total_dims=(31, 15)),
    CatalogEntry(key="no_oh2", label="-", total="H^23_7", base="OH^2", r=7, r_prime=7, fibre_model="H^7_7",
                 exists=ExistenceStatus.out_of_scope_proof, notes=_CAYLEY_NOTE,
                 invariants=(16, 0, 7, 7), total_dims=(23, 7)),
    CatalogEntry(key="no_oh2_1", label="-", total="H^23_15", base="OH^2_1", r=7, r_prime=7, fibre_model="H^7_7",
                 exists=ExistenceStatus.out_of_scope_proof, notes=_CAYLEY_NOTE,
                 invariants=(16, 8, 7, 7), total_dims=(23, 15)),
    CatalogEntry(key="no_oh2_2", label="-", total="H^23_23", base="OH^2_2", r=7, r_prime=7, fibre_model="H^7_7",
                 exists=ExistenceStatus.out_of_scope_proof, notes=_CAYLEY_NOTE,
                 invariants=(16, 16, 7, 7), total_dims=(23, 23)),
    CatalogEntry(key="no_o'p2", label="-", total="H^23_q, 8 <= q <= 15", base="O'P^2", r=7, r_prime=None,
                 fibre_model="H^7_{q-8}", exists=ExistenceStatus.out_of_scope_proof, notes=_CAYLEY_NOTE),
)


def catalog() -> List[CatalogEntry]:
    """Families (a)-(g), the composite submersions, then the annotated rows that do not occur."""
    return list(FAMILIES) + list(COMPOSITES) + list(NONEXISTENT)


@dataclass(frozen=True)
class CatalogMatch:
    entry: CatalogEntry
    spec: Optional[FibrationSpec] = None

    @property
    def label(self) -> str:
        return self.spec.label if self.spec is not None else self.entry.key


def lookup(a: int, l: int) -> List[CatalogMatch]:
    """Every catalogued submersion with total space H^a_l, in catalog order."""
    matches = []
    for entry in FAMILIES:
        for spec in entry.instances(max_m=max(a, 1)):
            if spec.total_dim == a and spec.total_index == l:
                matches.append(CatalogMatch(entry=entry, spec=spec))
    for entry in NONEXISTENT:
        if entry.total_dims == (a, l) or (entry.total_dims is None and a == 23 and 8 <= l <= 15):
            matches.append(CatalogMatch(entry=entry))
    return matches


def entry_for_spec(spec: FibrationSpec) -> CatalogEntry:
    """The unique catalog family with an instance of the same shape."""
    candidates = [entry for entry in FAMILIES + COMPOSITES if entry.matches(spec)]
    if len(candidates) != 1:
        raise ValueError(f"{spec.label} matches {len(candidates)} catalog entries")
    return candidates[0]


def entry_invariants(entry: CatalogEntry, max_m: int) -> List[Tuple[int, int, int, int]]:
    if entry.invariants is not None:
        return [entry.invariants]
    return [spec.invariants for spec in entry.instances(max_m)]


def admissibility_defects(max_m: int = 4) -> List[str]:
    """Catalog rows (composites excepted) whose (n, s, r, r') fail the index arithmetic."""
    defects = []
    for entry in FAMILIES + NONEXISTENT:
        for n, s, r, r_prime in entry_invariants(entry, max_m):
            if not admissible(n, s, r, r_prime).is_admissible:
                defects.append(f"{entry.key}: ({n}, {s}, {r}, {r_prime})")
    return defects


def catalog_to_json(indent: Optional[int] = 2) -> str:
    return json.dumps([entry.to_dict() for entry in catalog()], indent=indent)


def catalog_to_markdown() -> str:
    lines = ["## Classified submersions", "",
             "| row | submersion | total | base | fibre (r, r') | parameters | notes |",
             "|---|---|---|---|---|---|---|"]
    for entry in FAMILIES + COMPOSITES:
        lines.append(f"| {entry.key} | {entry.label} | {entry.total} | {entry.base} | "
                     f"{entry.fibre_model} ({entry.r}, {entry.r_prime}) | {entry.parameter_range} | {entry.notes} |")
    lines += ["", "## Rows that do not occur", "",
              "| row | total | base | fibre | status | argument |",
              "|---|---|---|---|---|---|"]
    for entry in NONEXISTENT:
        lines.append(f"| {entry.key} | {entry.total} | {entry.base} | {entry.fibre_model} | {entry.exists} | "
                     f"{entry.notes} |")
    return "\n".join(lines) + "\n"


def family_invariants(max_n: int = 32) -> Set[Tuple[int, int, int, int]]:
    """(n, s, r, r') of every family instance (a)-(g) over a base of dimension at most max_n."""
    return {spec.invariants
            for entry in FAMILIES
            for spec in entry.instances(max_m=max_n)
            if spec.base.dim <= max_n}
