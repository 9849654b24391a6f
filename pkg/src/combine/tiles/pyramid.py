"""Pyramid assembly: seven rasterized levels cut into tiles plus a manifest.

The checksum is SHA-256 over raw RGB tile rows in (z, x, y) order, never over
PNG bytes, so encoder differences cannot change identity. Level sides follow
side = 256 * 2^z throughout; the manifest records that law.
"""

from __future__ import annotations

import hashlib
import io
import json
import secrets
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

import numpy as np
from PIL import Image

from combine.analysis.graph import WeightedGraph, mst
from combine.tiles.layout import LayoutPositions, layout_bbox, positions_for_graph
from combine.tiles.raster import (
    MAX_ZOOM,
    TILE_SIZE,
    BBox,
    RGB,
    cut_tiles,
    rasterize_level,
)

SIZE_LAW = "side=256*2^z"


class TileCoord(NamedTuple):
    z: int
    x: int
    y: int

    def validate(self) -> "TileCoord":
        if not 0 <= self.z <= MAX_ZOOM:
            raise ValueError(f"zoom {self.z} outside 0..{MAX_ZOOM}")
        limit = 1 << self.z
        if not (0 <= self.x < limit and 0 <= self.y < limit):
            raise ValueError(f"tile ({self.x},{self.y}) outside level {self.z} bounds")
        return self


@dataclass
class Manifest:
    pyramid_id: str
    zoom_range: tuple[int, int]
    tile_size: int
    bbox: BBox
    size_law: str
    checksum: str
    node_count: int
    edge_count: int
    drawn_edge_count: int
    use_mst: bool
    palette: dict[str, RGB] = field(default_factory=dict)

    def to_doc(self) -> dict:
        return {
            "pyramid_id": self.pyramid_id,
            "zoom_range": list(self.zoom_range),
            "tile_size": self.tile_size,
            "bbox": list(self.bbox),
            "size_law": self.size_law,
            "checksum": self.checksum,
            "node_count": self.node_count,
            "edge_count": self.edge_count,
            "drawn_edge_count": self.drawn_edge_count,
            "use_mst": self.use_mst,
            "palette": {k: list(v) for k, v in self.palette.items()},
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "Manifest":
        return cls(
            pyramid_id=doc["pyramid_id"],
            zoom_range=tuple(doc["zoom_range"]),
            tile_size=doc["tile_size"],
            bbox=tuple(doc["bbox"]),
            size_law=doc["size_law"],
            checksum=doc["checksum"],
            node_count=doc["node_count"],
            edge_count=doc["edge_count"],
            drawn_edge_count=doc["drawn_edge_count"],
            use_mst=doc["use_mst"],
            palette={k: tuple(v) for k, v in doc.get("palette", {}).items()},
        )


@dataclass
class TilePyramid:
    manifest: Manifest
    tiles: dict[TileCoord, bytes]  # PNG-encoded

    def tile_count(self, z: int) -> int:
        return sum(1 for c in self.tiles if c.z == z)


def encode_png(tile: np.ndarray) -> bytes:
    buf = io.BytesIO()
    # low compression level: tile identity lives in raw rows, not PNG bytes
    Image.fromarray(tile, mode="RGB").save(buf, format="PNG", compress_level=1)
    return buf.getvalue()


def decode_png(data: bytes) -> np.ndarray:
    with Image.open(io.BytesIO(data)) as img:
        return np.asarray(img.convert("RGB"))


def build_pyramid(
    graph: WeightedGraph,
    positions: LayoutPositions,
    palette: dict[str, RGB] | None = None,
    categories: dict[int, str] | None = None,
    use_mst: bool = False,
    pyramid_id: str | None = None,
) -> TilePyramid:
    """Rasterize levels 0..6 of the graph scene and cut them into tiles."""
    pos = positions_for_graph(positions, graph.n)
    bbox = layout_bbox(positions) if positions else (0.0, 0.0, 0.0, 0.0)
    if use_mst:
        keep = mst(graph)
        drawn = [(e.u, e.v) for e in graph.edges if e.id in keep]
    else:
        drawn = [(e.u, e.v) for e in graph.edges]

    digest = hashlib.sha256()
    tiles: dict[TileCoord, bytes] = {}
    for z in range(MAX_ZOOM + 1):
        image = rasterize_level(pos, drawn, palette, z, bbox, categories)
        for (tz, tx, ty), tile in cut_tiles(image, z):
            tiles[TileCoord(tz, tx, ty)] = encode_png(tile)
        # checksum over raw RGB rows in (z, x, y) lexicographic order
        per_axis = 1 << z
        for tx in range(per_axis):
            for ty in range(per_axis):
                view = image[
                    ty * TILE_SIZE : (ty + 1) * TILE_SIZE, tx * TILE_SIZE : (tx + 1) * TILE_SIZE
                ]
                digest.update(np.ascontiguousarray(view).tobytes())
        del image

    manifest = Manifest(
        pyramid_id=pyramid_id or secrets.token_hex(16),
        zoom_range=(0, MAX_ZOOM),
        tile_size=TILE_SIZE,
        bbox=bbox,
        size_law=SIZE_LAW,
        checksum=digest.hexdigest(),
        node_count=graph.n,
        edge_count=len(graph.edges),
        drawn_edge_count=len(drawn),
        use_mst=use_mst,
        palette=dict(palette or {}),
    )
    return TilePyramid(manifest=manifest, tiles=tiles)


def write_pyramid(pyramid: TilePyramid, root: Path) -> None:
    """Write manifest.json plus tiles/{z}/{x}/{y}.png under root."""
    root = Path(root)
    root.mkdir(parents=True, exist_ok=True)
    (root / "manifest.json").write_text(
        json.dumps(pyramid.manifest.to_doc(), indent=2, sort_keys=True) + "\n"
    )
    for coord, data in pyramid.tiles.items():
        tile_dir = root / "tiles" / str(coord.z) / str(coord.x)
        tile_dir.mkdir(parents=True, exist_ok=True)
        (tile_dir / f"{coord.y}.png").write_bytes(data)


def load_manifest(root: Path) -> Manifest:
    return Manifest.from_doc(json.loads((Path(root) / "manifest.json").read_text()))


def tile_path(root: Path, coord: TileCoord) -> Path:
    return Path(root) / "tiles" / str(coord.z) / str(coord.x) / f"{coord.y}.png"


def expected_tile_total(max_zoom: int = MAX_ZOOM) -> int:
    return sum(4**z for z in range(max_zoom + 1))
