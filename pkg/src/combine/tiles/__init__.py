"""Tile-pyramid rendering and the details-on-demand policy."""

from combine.tiles.layout import (
    LayoutSizeError,
    export_layout,
    force_layout,
    import_layout,
    layout_bbox,
)
from combine.tiles.pyramid import (
    MAX_ZOOM,
    TILE_SIZE,
    Manifest,
    TileCoord,
    TilePyramid,
    build_pyramid,
    load_manifest,
    write_pyramid,
)
from combine.tiles.raster import cut_tiles, level_side, rasterize_level, world_to_pixel
from combine.tiles.viewport import LodDecision, Viewport, lod_decide, tiles_for_viewport

__all__ = [
    "LayoutSizeError",
    "LodDecision",
    "MAX_ZOOM",
    "Manifest",
    "TILE_SIZE",
    "TileCoord",
    "TilePyramid",
    "Viewport",
    "build_pyramid",
    "cut_tiles",
    "export_layout",
    "force_layout",
    "import_layout",
    "layout_bbox",
    "level_side",
    "load_manifest",
    "lod_decide",
    "rasterize_level",
    "tiles_for_viewport",
    "world_to_pixel",
    "write_pyramid",
]
