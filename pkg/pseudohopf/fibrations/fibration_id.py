from __future__ import annotations

from enum import Enum
from typing import List


class FibrationId(Enum):
    pi_C = 1
    pi_A = 2
    pi_H = 3
    pi_B = 4
    pi1 = 5
    pi2 = 6
    pi3 = 7
    pi4 = 8
    pi5 = 9
    pi6 = 10
    pi7 = 11
    pi8 = 12
    pi9 = 13
    pi_CH = 14
    pi_CB = 15
    pi_AB = 16

    @staticmethod
    def all() -> List[FibrationId]:
        """Catalog order; reports are always emitted in this order."""
        return list(FibrationId)

    @staticmethod
    def hopf_fibrations() -> List[FibrationId]:
        return [FibrationId.pi1, FibrationId.pi2, FibrationId.pi3, FibrationId.pi4, FibrationId.pi5,
                FibrationId.pi6, FibrationId.pi7, FibrationId.pi8, FibrationId.pi9]

    @staticmethod
    def composite_fibrations() -> List[FibrationId]:
        return [FibrationId.pi_CH, FibrationId.pi_CB, FibrationId.pi_AB]

    @staticmethod
    def with_index_parameter() -> List[FibrationId]:
        return [FibrationId.pi_C, FibrationId.pi_H, FibrationId.pi_CH]

    @staticmethod
    def from_string(string: str) -> FibrationId:
        return {fibration_id.name: fibration_id for fibration_id in FibrationId.all()}[string]

    def __str__(self):
        return self.name
