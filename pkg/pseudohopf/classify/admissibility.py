from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, List, Tuple

from ..utilities import get_logger

logger = get_logger(__name__)

FIBRE_DIMENSIONS: Tuple[int, ...] = (1, 3, 7)
PARALLELIZABLE_FIBRE_INDICES: FrozenSet[int] = frozenset({3, 7})


@dataclass(frozen=True)
class AdmissibilityInstance:
    """
    (n, s, r, r') with every decomposition n = k(r+1), s = q1(r'+1) + q2(r-r'), q1 + q2 = k.
    """
    n: int
    s: int
    r: int
    r_prime: int
    solutions: List[Tuple[int, int, int]] = field(default_factory=list)

    @property
    def is_admissible(self) -> bool:
        return len(self.solutions) > 0

    @property
    def invariants(self) -> Tuple[int, int, int, int]:
        return self.n, self.s, self.r, self.r_prime


def admissible(n: int, s: int, r: int, r_prime: int) -> AdmissibilityInstance:
    """Exhaustive enumeration of (k, q1, q2); out-of-range arguments have no solutions."""
    solutions = []
    if 0 <= r_prime <= r and 0 <= s <= n and n > 0 and n % (r + 1) == 0:
        k = n // (r + 1)
        for q1 in range(k + 1):
            q2 = k - q1
            if q1 * (r_prime + 1) + q2 * (r - r_prime) == s:
                solutions.append((k, q1, q2))
    return AdmissibilityInstance(n=n, s=s, r=r, r_prime=r_prime, solutions=solutions)


def fibre_parallelizability_filter(r_prime: int) -> FrozenSet[int]:
    """
    Fibre indices compatible with parallelizable fibres: {3, 7} once r' >= 2. Smaller r' are left to the
    other cases and pass through unchanged.
    """
    if r_prime >= 2:
        return PARALLELIZABLE_FIBRE_INDICES
    return frozenset({r_prime})


def _passes_fibre_rules(n: int, s: int, r: int, r_prime: int) -> bool:
    if r_prime not in fibre_parallelizability_filter(r_prime):
        return False
    if s in (0, n) and r_prime != r:
        # Riemannian or negative definite bases force negative definite fibres
        return False
    if n == r + 1:
        # constant curvature -4: indefinite bases only for r = 2r'+1, s = r'+1
        return s in (0, n) or (r == 2 * r_prime + 1 and s == r_prime + 1)
    allowed = {r} | ({0} if r == 1 else set()) | ({1} if r == 3 else set())
    return r_prime in allowed


def _candidates(max_n: int):
    for r in FIBRE_DIMENSIONS:
        for r_prime in range(r + 1):
            for n in range(r + 1, max_n + 1, r + 1):
                for s in range(n + 1):
                    instance = admissible(n, s, r, r_prime)
                    if instance.is_admissible and _passes_fibre_rules(n, s, r, r_prime):
                        yield instance


def derive_classified_rows(max_n: int = 32) -> List[AdmissibilityInstance]:
    """
    (n, s, r, r') rows that survive the index arithmetic, the fibre rules and the exclusion of the octonionic
    and para-octonionic planes (r = 7 only over 8-dimensional bases), sorted.
    """
    rows = [instance for instance in _candidates(max_n) if instance.r != 7 or instance.n == 8]
    rows.sort(key=lambda instance: (instance.r, instance.r_prime, instance.n, instance.s))
    logger.debug(f"Derived {len(rows)} classified rows for n <= {max_n}")
    return rows


def excluded_rows(max_n: int = 32) -> List[AdmissibilityInstance]:
    """Rows that pass every arithmetic rule and only fail because r = 7 over a base of dimension n > 8."""
    return sorted((instance for instance in _candidates(max_n) if instance.r == 7 and instance.n != 8),
                  key=lambda instance: (instance.n, instance.s, instance.r_prime))
