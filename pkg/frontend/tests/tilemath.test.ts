import { describe, expect, it } from "vitest";

import {
  levelSide,
  pixelToWorld,
  tilesForViewport,
  worldToPixel,
  type BBox,
  type Viewport,
} from "../src/tilemath.js";

const SQUARE: BBox = [0, 0, 10, 10];

describe("level mapping (mirror of the server contract)", () => {
  it("level sides follow 256*2^z", () => {
    expect([0, 1, 2, 3, 4, 5, 6].map(levelSide)).toEqual([256, 512, 1024, 2048, 4096, 8192, 16384]);
  });

  it("bbox center maps to the level center", () => {
    expect(worldToPixel(SQUARE, 0, [5, 5])).toEqual([128, 128]);
  });

  it("corner maps to the 2% margin", () => {
    const [px, py] = worldToPixel(SQUARE, 3, [0, 0]);
    expect(px).toBeCloseTo(40.96, 10);
    expect(py).toBeCloseTo(40.96, 10);
  });

  it("doubling the level doubles unrounded pixels exactly", () => {
    for (const point of [[1, 2], [9.9, 0.1]] as [number, number][]) {
      for (let z = 0; z < 6; z++) {
        const a = worldToPixel(SQUARE, z, point);
        const b = worldToPixel(SQUARE, z + 1, point);
        expect(b[0]).toBe(2 * a[0]);
        expect(b[1]).toBe(2 * a[1]);
      }
    }
  });

  it("pixelToWorld inverts worldToPixel", () => {
    const p: [number, number] = [3.7, 8.1];
    const px = worldToPixel(SQUARE, 4, p);
    const back = pixelToWorld(SQUARE, 4, px);
    expect(back[0]).toBeCloseTo(p[0], 9);
    expect(back[1]).toBeCloseTo(p[1], 9);
  });
});

describe("tilesForViewport", () => {
  it("whole world at z=0 is the single root tile", () => {
    const vp: Viewport = { center: [5, 5], width: 256, height: 256, z: 0 };
    expect(tilesForViewport(vp, SQUARE)).toEqual([{ z: 0, x: 0, y: 0 }]);
  });

  it("viewport inside one tile selects at most 3x3 with the margin", () => {
    const origin = worldToPixel(SQUARE, 2, [0, 0]);
    const scale = worldToPixel(SQUARE, 2, [1, 0])[0] - origin[0];
    const wx = (384 - origin[0]) / scale;
    const wy = (384 - origin[1]) / scale;
    const tiles = tilesForViewport({ center: [wx, wy], width: 256, height: 256, z: 2 }, SQUARE);
    expect(tiles.length).toBeLessThanOrEqual(9);
    expect(tiles).toContainEqual({ z: 2, x: 1, y: 1 });
  });

  it("viewport far outside the world clamps to nothing", () => {
    const vp: Viewport = { center: [10_000, 10_000], width: 100, height: 100, z: 2 };
    expect(tilesForViewport(vp, SQUARE)).toEqual([]);
  });

  it("all results stay within level bounds", () => {
    for (let z = 0; z <= 6; z++) {
      const vp: Viewport = { center: [9, 9], width: 1200, height: 900, z };
      for (const t of tilesForViewport(vp, SQUARE)) {
        expect(t.z).toBe(z);
        expect(t.x).toBeGreaterThanOrEqual(0);
        expect(t.x).toBeLessThan(1 << z);
        expect(t.y).toBeGreaterThanOrEqual(0);
        expect(t.y).toBeLessThan(1 << z);
      }
    }
  });
});
