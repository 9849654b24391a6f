"""Per-column min-max normalization and the red-yellow-green heatmap ramp."""

from __future__ import annotations

import math
from dataclasses import dataclass

RGB = tuple[int, int, int]


@dataclass(frozen=True)
class Heatmap:
    values: tuple[tuple[float | None, ...], ...]  # per column, normalized to [0,1]
    colors: tuple[tuple[RGB | None, ...], ...]


def color_ramp(t: float) -> RGB:
    """Linear red(0) -> yellow(0.5) -> green(1) ramp."""
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"ramp input {t} outside [0,1]")
    if t <= 0.5:
        return (255, round(255 * (t / 0.5)), 0)
    return (round(255 * ((1.0 - t) / 0.5)), 255, 0)


def heatmap_normalize(columns: list[list[float | None]]) -> Heatmap:
    """Min-max scale each column into [0,1]; constant columns map to 0.5.

    Null cells stay null. A column with no finite value is an error.
    """
    values = []
    colors = []
    for ci, column in enumerate(columns):
        finite = [v for v in column if v is not None]
        for v in finite:
            if not math.isfinite(v):
                raise ValueError(f"non-finite value in column {ci}")
        if not finite:
            raise ValueError(f"column {ci} has no finite values")
        lo, hi = min(finite), max(finite)
        span = hi - lo
        scaled: list[float | None] = []
        for v in column:
            if v is None:
                scaled.append(None)
            elif span == 0.0:
                scaled.append(0.5)
            else:
                scaled.append((v - lo) / span)
        values.append(tuple(scaled))
        colors.append(tuple(None if s is None else color_ramp(s) for s in scaled))
    return Heatmap(values=tuple(values), colors=tuple(colors))
