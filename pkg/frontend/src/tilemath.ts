/** Tile arithmetic mirroring the server contract exactly.
 *
 * The world bounding box maps into the 256*2^z level square with a uniform
 * 2% margin and aspect preserved by centering the shorter axis. Covered
 * tiles treat cells as half-open [t*256, (t+1)*256), then a one-tile margin
 * is added on every side and the result clamped to level bounds. The tile
 * viewer must never request outside this set.
 */

export const TILE_SIZE = 256;
export const MAX_ZOOM = 6;
export const MARGIN_FRACTION = 0.02;

export type BBox = [number, number, number, number]; // minX, minY, maxX, maxY
export type Point = [number, number];

export interface TileCoord {
  z: number;
  x: number;
  y: number;
}

export interface Viewport {
  center: Point; // world coordinates
  width: number; // screen px
  height: number; // screen px
  z: number;
}

export function levelSide(z: number): number {
  if (z < 0 || z > MAX_ZOOM) throw new Error(`zoom ${z} outside 0..${MAX_ZOOM}`);
  return TILE_SIZE * (1 << z);
}

interface Mapping {
  scale: number;
  offX: number;
  offY: number;
  side: number;
}

function mapping(bbox: BBox, z: number): Mapping {
  const side = levelSide(z);
  const margin = MARGIN_FRACTION * side;
  const drawable = side - 2 * margin;
  const [minX, minY, maxX, maxY] = bbox;
  const extentX = maxX - minX;
  const extentY = maxY - minY;
  const extent = Math.max(extentX, extentY);
  if (extent === 0) return { scale: 0, offX: side / 2, offY: side / 2, side };
  const scale = drawable / extent;
  const padX = (drawable - extentX * scale) / 2;
  const padY = (drawable - extentY * scale) / 2;
  return { scale, offX: margin + padX, offY: margin + padY, side };
}

export function worldToPixel(bbox: BBox, z: number, point: Point): Point {
  const m = mapping(bbox, z);
  if (m.scale === 0) return [m.offX, m.offY];
  return [m.offX + (point[0] - bbox[0]) * m.scale, m.offY + (point[1] - bbox[1]) * m.scale];
}

export function pixelToWorld(bbox: BBox, z: number, px: Point): Point {
  const m = mapping(bbox, z);
  if (m.scale === 0) return [bbox[0], bbox[1]];
  return [bbox[0] + (px[0] - m.offX) / m.scale, bbox[1] + (px[1] - m.offY) / m.scale];
}

export function tileKey(c: TileCoord): string {
  return `${c.z}/${c.x}/${c.y}`;
}

export function tilesForViewport(vp: Viewport, bbox: BBox): TileCoord[] {
  const [cx, cy] = worldToPixel(bbox, vp.z, vp.center);
  const left = cx - vp.width / 2;
  const right = cx + vp.width / 2;
  const top = cy - vp.height / 2;
  const bottom = cy + vp.height / 2;

  const limit = 1 << vp.z;
  const xLo = Math.max(Math.floor(left / TILE_SIZE) - 1, 0);
  const xHi = Math.min(Math.ceil(right / TILE_SIZE), limit - 1);
  const yLo = Math.max(Math.floor(top / TILE_SIZE) - 1, 0);
  const yHi = Math.min(Math.ceil(bottom / TILE_SIZE), limit - 1);

  const out: TileCoord[] = [];
  for (let x = xLo; x <= xHi; x++) {
    for (let y = yLo; y <= yHi; y++) {
      out.push({ z: vp.z, x, y });
    }
  }
  return out;
}
