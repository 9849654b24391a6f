/** Zoomable tile viewer for very large networks.
 *
 * The viewer only ever requests the exact tile set the viewport contract
 * allows (tilesForViewport); loaded tiles are cached, failed ones draw as
 * gray placeholders and are retried on the next sync. Scroll zoom steps the
 * level by one while keeping the world point under the cursor fixed.
 */

import type { DrawSurface } from "./draw.js";
import {
  BBox,
  MAX_ZOOM,
  Point,
  TILE_SIZE,
  TileCoord,
  Viewport,
  pixelToWorld,
  tileKey,
  tilesForViewport,
  worldToPixel,
} from "./tilemath.js";

export interface TileSource {
  /** Resolve a tile to a drawable src; reject on a missing/failed tile. */
  request(coord: TileCoord): Promise<string>;
}

type TileState = { status: "loaded"; src: string } | { status: "pending" } | { status: "failed" };

export interface TileViewerOptions {
  bbox: BBox;
  screenWidth: number;
  screenHeight: number;
  source: TileSource;
  onNodeSpawn?: (world: Point) => void;
}

export class TileViewer {
  center: Point;
  z = 0;
  private readonly bbox: BBox;
  private readonly width: number;
  private readonly height: number;
  private readonly source: TileSource;
  private readonly tiles = new Map<string, TileState>();
  private readonly onNodeSpawn?: (world: Point) => void;

  constructor(options: TileViewerOptions) {
    this.bbox = options.bbox;
    this.width = options.screenWidth;
    this.height = options.screenHeight;
    this.source = options.source;
    this.onNodeSpawn = options.onNodeSpawn;
    this.center = [
      (options.bbox[0] + options.bbox[2]) / 2,
      (options.bbox[1] + options.bbox[3]) / 2,
    ];
  }

  viewport(): Viewport {
    return { center: this.center, width: this.width, height: this.height, z: this.z };
  }

  visibleTiles(): TileCoord[] {
    return tilesForViewport(this.viewport(), this.bbox);
  }

  /** Request every visible tile not already loaded or in flight. */
  sync(): Promise<void> {
    const wanted = this.visibleTiles();
    const waits: Promise<void>[] = [];
    for (const coord of wanted) {
      const key = tileKey(coord);
      const state = this.tiles.get(key);
      if (state && (state.status === "loaded" || state.status === "pending")) continue;
      this.tiles.set(key, { status: "pending" });
      waits.push(
        this.source.request(coord).then(
          (src) => void this.tiles.set(key, { status: "loaded", src }),
          () => void this.tiles.set(key, { status: "failed" }),
        ),
      );
    }
    return Promise.all(waits).then(() => undefined);
  }

  /** Screen position of a world point at the current level. */
  worldToScreen(p: Point): Point {
    const [px, py] = worldToPixel(this.bbox, this.z, p);
    const [cx, cy] = worldToPixel(this.bbox, this.z, this.center);
    return [px - cx + this.width / 2, py - cy + this.height / 2];
  }

  screenToWorld(s: Point): Point {
    const [cx, cy] = worldToPixel(this.bbox, this.z, this.center);
    return pixelToWorld(this.bbox, this.z, [s[0] - this.width / 2 + cx, s[1] - this.height / 2 + cy]);
  }

  panByPixels(dx: number, dy: number): void {
    const [cx, cy] = worldToPixel(this.bbox, this.z, this.center);
    this.center = pixelToWorld(this.bbox, this.z, [cx + dx, cy + dy]);
  }

  /** Step zoom by +-1, keeping the world point under the cursor stationary. */
  scrollZoom(cursor: Point, step: 1 | -1): void {
    const nextZ = Math.min(Math.max(this.z + step, 0), MAX_ZOOM);
    if (nextZ === this.z) return;
    const anchor = this.screenToWorld(cursor);
    const [ax, ay] = worldToPixel(this.bbox, nextZ, anchor);
    this.z = nextZ;
    this.center = pixelToWorld(this.bbox, nextZ, [
      ax - (cursor[0] - this.width / 2),
      ay - (cursor[1] - this.height / 2),
    ]);
  }

  /** Double-click: spawn a detail node for the graph node nearest the cursor. */
  doubleClick(cursor: Point): void {
    this.onNodeSpawn?.(this.screenToWorld(cursor));
  }

  /** Draw loaded tiles; pending and failed tiles render as gray placeholders. */
  draw(surface: DrawSurface): { placeholders: number } {
    const [cx, cy] = worldToPixel(this.bbox, this.z, this.center);
    let placeholders = 0;
    for (const coord of this.visibleTiles()) {
      const key = tileKey(coord);
      const state = this.tiles.get(key);
      const x = coord.x * TILE_SIZE - cx + this.width / 2;
      const y = coord.y * TILE_SIZE - cy + this.height / 2;
      if (state?.status === "loaded") {
        surface.push({ op: "image", x, y, w: TILE_SIZE, h: TILE_SIZE, src: state.src });
      } else {
        surface.push({ op: "rect", x, y, w: TILE_SIZE, h: TILE_SIZE, fill: "#bdbdbd" });
        placeholders += 1;
      }
    }
    return { placeholders };
  }

  /** Tiles currently marked failed (retry happens on the next sync). */
  failedTiles(): string[] {
    return [...this.tiles.entries()].filter(([, s]) => s.status === "failed").map(([k]) => k);
  }
}

/** Nearest node lookup over a layout index (id -> world position). */
export function nearestNode(
  positions: Record<string, [number, number]>,
  world: Point,
): { id: string; distance: number } | null {
  let best: { id: string; distance: number } | null = null;
  for (const [id, [x, y]] of Object.entries(positions)) {
    const d = Math.hypot(x - world[0], y - world[1]);
    if (!best || d < best.distance) best = { id, distance: d };
  }
  return best;
}
