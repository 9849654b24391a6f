/** Preview panel: whole-network overview with a lens over the focused area. */

import { CARD_HEIGHT, CARD_WIDTH } from "./canvas.js";
import type { DrawSurface } from "./draw.js";
import type { NetworkDoc } from "./types.js";
import { ViewState, centerOn, screenToWorld } from "./view.js";

export const MINIMAP_WIDTH = 200;
export const MINIMAP_HEIGHT = 140;
const PAD = 10;

export interface MinimapLayout {
  x: number; // top-left on the canvas (bottom-right corner placement)
  y: number;
  width: number;
  height: number;
  worldBounds: [number, number, number, number];
  scale: number;
}

export function minimapLayout(view: ViewState, doc: NetworkDoc): MinimapLayout {
  const positions = Object.values(doc.positions);
  let [minX, minY, maxX, maxY] = [0, 0, 1, 1];
  if (positions.length) {
    minX = Math.min(...positions.map((p) => p[0]));
    minY = Math.min(...positions.map((p) => p[1]));
    maxX = Math.max(...positions.map((p) => p[0])) + CARD_WIDTH;
    maxY = Math.max(...positions.map((p) => p[1])) + CARD_HEIGHT;
  }
  const extentX = Math.max(maxX - minX, 1);
  const extentY = Math.max(maxY - minY, 1);
  const scale = Math.min((MINIMAP_WIDTH - 8) / extentX, (MINIMAP_HEIGHT - 8) / extentY);
  return {
    x: view.width - MINIMAP_WIDTH - PAD,
    y: view.height - MINIMAP_HEIGHT - PAD,
    width: MINIMAP_WIDTH,
    height: MINIMAP_HEIGHT,
    worldBounds: [minX, minY, maxX, maxY],
    scale,
  };
}

function toMinimap(layout: MinimapLayout, p: [number, number]): [number, number] {
  return [
    layout.x + 4 + (p[0] - layout.worldBounds[0]) * layout.scale,
    layout.y + 4 + (p[1] - layout.worldBounds[1]) * layout.scale,
  ];
}

/** The lens rectangle mirroring the current viewport, in canvas pixels. */
export function lensRect(view: ViewState, layout: MinimapLayout): [number, number, number, number] {
  const topLeft = toMinimap(layout, screenToWorld(view, [0, 0]));
  const bottomRight = toMinimap(layout, screenToWorld(view, [view.width, view.height]));
  return [topLeft[0], topLeft[1], bottomRight[0] - topLeft[0], bottomRight[1] - topLeft[1]];
}

export function drawMinimap(view: ViewState, doc: NetworkDoc, surface: DrawSurface): MinimapLayout {
  const layout = minimapLayout(view, doc);
  surface.push({ op: "rect", x: layout.x, y: layout.y, w: layout.width, h: layout.height, fill: "#f5f7f8" });
  surface.push({ op: "frame", x: layout.x, y: layout.y, w: layout.width, h: layout.height, stroke: "#78909c" });
  for (const p of Object.values(doc.positions)) {
    const [mx, my] = toMinimap(layout, p);
    surface.push({ op: "rect", x: mx, y: my, w: 3, h: 3, fill: "#455a64" });
  }
  const [lx, ly, lw, lh] = lensRect(view, layout);
  surface.push({ op: "frame", x: lx, y: ly, w: lw, h: lh, stroke: "#ff6f00" });
  return layout;
}

export function isInsideMinimap(layout: MinimapLayout, px: number, py: number): boolean {
  return (
    px >= layout.x && px <= layout.x + layout.width && py >= layout.y && py <= layout.y + layout.height
  );
}

/** Clicking the minimap recenters the viewport on the clicked world point. */
export function clickToRecenter(view: ViewState, layout: MinimapLayout, px: number, py: number): ViewState {
  const world: [number, number] = [
    layout.worldBounds[0] + (px - layout.x - 4) / layout.scale,
    layout.worldBounds[1] + (py - layout.y - 4) / layout.scale,
  ];
  return centerOn(view, world);
}
