from __future__ import annotations

from typing import Dict, Mapping, Optional

from .constants import DEFAULT_TOLERANCES


class Tolerances:
    """
    The single tolerance record of a run: defaults from DEFAULT_TOLERANCES plus per-identity overrides.
    """

    def __init__(self, overrides: Optional[Mapping[str, float]] = None):
        self._values: Dict[str, float] = dict(DEFAULT_TOLERANCES)
        for identity_id, value in (overrides or {}).items():
            if identity_id not in self._values:
                raise KeyError(f"Unknown identity id for tolerance override: {identity_id}")
            value = float(value)
            if value <= 0:
                raise ValueError(f"Tolerance for {identity_id} must be positive, got {value}")
            self._values[identity_id] = value

    @staticmethod
    def known_identities():
        return list(DEFAULT_TOLERANCES.keys())

    def __getitem__(self, identity_id: str) -> float:
        return self._values[identity_id]

    def to_dict(self) -> Dict[str, float]:
        return dict(self._values)

    def overridden(self) -> Dict[str, float]:
        return {key: value for key, value in self._values.items() if DEFAULT_TOLERANCES[key] != value}
