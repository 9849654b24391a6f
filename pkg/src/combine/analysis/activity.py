"""pChEMBL arithmetic: negative log10 of a molar activity value."""

from __future__ import annotations

import math

UNIT_TO_MOLAR = {"M": 1.0, "mM": 1e-3, "µM": 1e-6, "uM": 1e-6, "nM": 1e-9}


def pchembl(value: float, unit: str = "M") -> float:
    """-log10 of the activity expressed in molar; value must be positive."""
    factor = UNIT_TO_MOLAR.get(unit)
    if factor is None:
        raise ValueError(f"unknown unit {unit!r}; expected one of {sorted(UNIT_TO_MOLAR)}")
    if value <= 0:
        raise ValueError(f"activity value must be positive, got {value}")
    return -math.log10(value * factor)
