"""Viewport tile selection and the node-level LOD policy."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from combine.tiles.pyramid import TileCoord
from combine.tiles.raster import MAX_ZOOM, TILE_SIZE, BBox, world_to_pixel_float

DEFAULT_LOD_THRESHOLD = 64  # px; below this a node renders as a static image

Rect = tuple[float, float, float, float]  # x0, y0, x1, y1


@dataclass(frozen=True)
class Viewport:
    center: tuple[float, float]  # world coordinates
    width: float  # screen px
    height: float  # screen px
    z: int

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("viewport dimensions must be positive")
        if not 0 <= self.z <= MAX_ZOOM:
            raise ValueError(f"zoom {self.z} outside 0..{MAX_ZOOM}")


class LodDecision(enum.Enum):
    SKIP = "skip"
    STATIC_IMAGE = "static-image"
    INTERACTIVE = "interactive"


def tiles_for_viewport(vp: Viewport, bbox: BBox) -> set[TileCoord]:
    """Tiles intersecting the viewport in level-z pixel space, plus a one-tile margin."""
    cx, cy = world_to_pixel_float(bbox, vp.z, vp.center)
    left, right = cx - vp.width / 2.0, cx + vp.width / 2.0
    top, bottom = cy - vp.height / 2.0, cy + vp.height / 2.0

    # covered tiles treat [t*256, (t+1)*256) half-open, then one-tile margin
    x_lo = math.floor(left / TILE_SIZE) - 1
    x_hi = math.ceil(right / TILE_SIZE)
    y_lo = math.floor(top / TILE_SIZE) - 1
    y_hi = math.ceil(bottom / TILE_SIZE)

    limit = 1 << vp.z
    x_lo, x_hi = max(x_lo, 0), min(x_hi, limit - 1)
    y_lo, y_hi = max(y_lo, 0), min(y_hi, limit - 1)
    return {
        TileCoord(vp.z, x, y)
        for x in range(x_lo, x_hi + 1)
        for y in range(y_lo, y_hi + 1)
    }


def lod_decide(
    node_rect: Rect, viewport_rect: Rect, threshold: float = DEFAULT_LOD_THRESHOLD
) -> LodDecision:
    """Skip off-screen nodes, thumbnail tiny ones, render the rest live."""
    nx0, ny0, nx1, ny1 = node_rect
    vx0, vy0, vx1, vy1 = viewport_rect
    if nx1 < vx0 or nx0 > vx1 or ny1 < vy0 or ny0 > vy1:
        return LodDecision.SKIP
    if max(nx1 - nx0, ny1 - ny0) < threshold:
        return LodDecision.STATIC_IMAGE
    return LodDecision.INTERACTIVE
