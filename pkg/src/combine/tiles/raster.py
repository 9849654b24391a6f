"""Deterministic rasterization of node-link scenes into power-of-two images.

Levels are 256*2^z pixels square (z = 0..6). The world bounding box maps into
the level square with a uniform 2% margin, aspect preserved by centering the
shorter axis; pixel rounding is half-away-from-zero. Edges draw first as 1-px
integer Bresenham lines, then nodes as filled discs of radius max(1, z) in
ascending node order, so output bytes are identical on every platform.
"""

from __future__ import annotations

import math

import numpy as np

TILE_SIZE = 256
MAX_ZOOM = 6
MARGIN_FRACTION = 0.02

GRAY = (128, 128, 128)  # default node color for unmapped categories
RGB = tuple[int, int, int]
BBox = tuple[float, float, float, float]  # min_x, min_y, max_x, max_y


def level_side(z: int) -> int:
    if not 0 <= z <= MAX_ZOOM:
        raise ValueError(f"zoom {z} outside 0..{MAX_ZOOM}")
    return TILE_SIZE * (1 << z)


def _mapping(bbox: BBox, z: int) -> tuple[float, float, float, float, float]:
    """(scale, offset_x, offset_y, side, margin) for the world->pixel map."""
    side = float(level_side(z))
    margin = MARGIN_FRACTION * side
    drawable = side - 2.0 * margin
    min_x, min_y, max_x, max_y = bbox
    extent_x, extent_y = max_x - min_x, max_y - min_y
    if extent_x < 0 or extent_y < 0:
        raise ValueError(f"inverted bbox {bbox}")
    extent = max(extent_x, extent_y)
    if extent == 0.0:
        return 0.0, side / 2.0, side / 2.0, side, margin
    scale = drawable / extent
    pad_x = (drawable - extent_x * scale) / 2.0
    pad_y = (drawable - extent_y * scale) / 2.0
    return scale, margin + pad_x, margin + pad_y, side, margin


def _round_half_away(v: float) -> int:
    return int(math.floor(abs(v) + 0.5)) * (1 if v >= 0 else -1)


def world_to_pixel(bbox: BBox, z: int, point: tuple[float, float]) -> tuple[int, int]:
    """Map one world point into level-z pixel coordinates."""
    x, y = point
    if not (math.isfinite(x) and math.isfinite(y)):
        raise ValueError(f"non-finite point {point}")
    scale, off_x, off_y, _, _ = _mapping(bbox, z)
    if scale == 0.0:
        return _round_half_away(off_x), _round_half_away(off_y)
    px = off_x + (x - bbox[0]) * scale
    py = off_y + (y - bbox[1]) * scale
    return _round_half_away(px), _round_half_away(py)


def world_to_pixel_float(bbox: BBox, z: int, point: tuple[float, float]) -> tuple[float, float]:
    """Unrounded variant used for viewport arithmetic."""
    scale, off_x, off_y, _, _ = _mapping(bbox, z)
    if scale == 0.0:
        return off_x, off_y
    return off_x + (point[0] - bbox[0]) * scale, off_y + (point[1] - bbox[1]) * scale


def _pixels_for_nodes(bbox: BBox, z: int, pos: np.ndarray) -> np.ndarray:
    scale, off_x, off_y, _, _ = _mapping(bbox, z)
    if scale == 0.0:
        px = np.full((len(pos), 2), 0.0)
        px[:, 0], px[:, 1] = off_x, off_y
    else:
        px = np.empty_like(pos)
        px[:, 0] = off_x + (pos[:, 0] - bbox[0]) * scale
        px[:, 1] = off_y + (pos[:, 1] - bbox[1]) * scale
    return (np.floor(np.abs(px) + 0.5) * np.sign(px)).astype(np.int64)


def _line_points(x0: int, y0: int, x1: int, y1: int) -> tuple[np.ndarray, np.ndarray]:
    """Integer Bresenham (midpoint) points from (x0,y0) to (x1,y1) inclusive."""
    dx, dy = abs(x1 - x0), abs(y1 - y0)
    sx = 1 if x1 >= x0 else -1
    sy = 1 if y1 >= y0 else -1
    if dx == 0 and dy == 0:
        return np.array([x0]), np.array([y0])
    if dx >= dy:
        t = np.arange(dx + 1, dtype=np.int64)
        xs = x0 + sx * t
        ys = y0 + sy * ((2 * t * dy + dx) // (2 * dx))
    else:
        t = np.arange(dy + 1, dtype=np.int64)
        ys = y0 + sy * t
        xs = x0 + sx * ((2 * t * dx + dy) // (2 * dy))
    return xs, ys


def _disc_offsets(radius: int) -> tuple[np.ndarray, np.ndarray]:
    span = np.arange(-radius, radius + 1)
    dx, dy = np.meshgrid(span, span)
    mask = dx * dx + dy * dy <= radius * radius
    return dx[mask], dy[mask]


def rasterize_level(
    positions: np.ndarray,
    edges: list[tuple[int, int]],
    palette: dict[str, RGB] | None,
    z: int,
    bbox: BBox,
    categories: dict[int, str] | None = None,
) -> np.ndarray:
    """Render one zoom level to an RGB array of side 256*2^z."""
    side = level_side(z)
    image = np.full((side, side, 3), 255, dtype=np.uint8)
    if len(positions) == 0:
        return image
    pixels = _pixels_for_nodes(bbox, z, positions)

    edge_color = np.array((160, 160, 160), dtype=np.uint8)
    for u, v in edges:
        xs, ys = _line_points(pixels[u, 0], pixels[u, 1], pixels[v, 0], pixels[v, 1])
        keep = (xs >= 0) & (xs < side) & (ys >= 0) & (ys < side)
        image[ys[keep], xs[keep]] = edge_color

    radius = max(1, z)
    dx, dy = _disc_offsets(radius)
    palette = palette or {}
    categories = categories or {}
    for i in range(len(positions)):
        color = palette.get(categories.get(i, ""), GRAY)
        xs = pixels[i, 0] + dx
        ys = pixels[i, 1] + dy
        keep = (xs >= 0) & (xs < side) & (ys >= 0) & (ys < side)
        image[ys[keep], xs[keep]] = color
    return image


def cut_tiles(image: np.ndarray, z: int) -> list[tuple[tuple[int, int, int], np.ndarray]]:
    """Cut a level image into 4^z 256x256 tiles in row-major order."""
    side = level_side(z)
    if image.shape[0] != side or image.shape[1] != side:
        raise ValueError(f"level {z} image must be {side}x{side}, got {image.shape[:2]}")
    tiles = []
    per_axis = 1 << z
    for ty in range(per_axis):
        for tx in range(per_axis):
            view = image[
                ty * TILE_SIZE : (ty + 1) * TILE_SIZE, tx * TILE_SIZE : (tx + 1) * TILE_SIZE
            ]
            tiles.append(((z, tx, ty), view))
    return tiles
