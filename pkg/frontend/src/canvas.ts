/** Network canvas: LOD-culled drawing of nodes and edges.
 *
 * Nodes outside the viewport are skipped entirely, tiny ones draw as
 * thumbnails, the rest render live. A renderer that throws paints an error
 * placeholder for its own node only; the frame always completes.
 */

import { DrawSurface } from "./draw.js";
import { LodDecision, lodDecide, Rect } from "./lod.js";
import { rendererFor } from "./renderers.js";
import type { NetworkDoc, NodeDoc } from "./types.js";
import { ViewState, worldToScreen } from "./view.js";

export const CARD_WIDTH = 220; // world units
export const CARD_HEIGHT = 150;

export interface RenderStats {
  drawn: number;
  thumbnails: number;
  skipped: number;
  errors: number;
}

export function nodeScreenRect(view: ViewState, doc: NetworkDoc, nodeId: string): Rect {
  const [x, y] = doc.positions[nodeId] ?? [0, 0];
  const [sx, sy] = worldToScreen(view, [x, y]);
  return [sx, sy, sx + CARD_WIDTH * view.zoom, sy + CARD_HEIGHT * view.zoom];
}

export function renderNetwork(
  view: ViewState,
  doc: NetworkDoc,
  surface: DrawSurface,
  lodThreshold?: number,
): RenderStats {
  const viewport: Rect = [0, 0, view.width, view.height];
  const stats: RenderStats = { drawn: 0, thumbnails: 0, skipped: 0, errors: 0 };

  const decisions = new Map<string, LodDecision>();
  for (const nodeId of Object.keys(doc.nodes)) {
    decisions.set(nodeId, lodDecide(nodeScreenRect(view, doc, nodeId), viewport, lodThreshold));
  }

  for (const edge of Object.values(doc.edges)) {
    const a = centerOf(view, doc, edge.source.node);
    const b = centerOf(view, doc, edge.target.node);
    if (!a || !b) continue;
    if (decisions.get(edge.source.node) === "skip" && decisions.get(edge.target.node) === "skip") {
      continue;
    }
    surface.push({
      op: "line",
      x0: a[0],
      y0: a[1],
      x1: b[0],
      y1: b[1],
      stroke: edge.kind === "spawn" ? "#7b1fa2" : "#607d8b",
      arrow: edge.kind === "spawn" || edge.directed,
    });
  }

  for (const [nodeId, node] of Object.entries(doc.nodes)) {
    const rect = nodeScreenRect(view, doc, nodeId);
    const decision = decisions.get(nodeId)!;
    if (decision === "skip") {
      stats.skipped += 1;
      continue;
    }
    const box = {
      x: rect[0],
      y: rect[1],
      w: rect[2] - rect[0],
      h: rect[3] - rect[1],
      zoom: view.zoom,
    };
    if (decision === "static-image") {
      drawThumbnail(node, box, surface);
      stats.thumbnails += 1;
      continue;
    }
    try {
      rendererFor(node.kind)(node, box, surface);
      stats.drawn += 1;
    } catch (err) {
      surface.push({
        op: "error-placeholder",
        x: box.x,
        y: box.y,
        w: box.w,
        h: box.h,
        message: String(err),
      });
      stats.errors += 1;
    }
    if (view.selected === nodeId) {
      surface.push({ op: "frame", x: box.x - 2, y: box.y - 2, w: box.w + 4, h: box.h + 4, stroke: "#ff6f00" });
    }
  }
  return stats;
}

function drawThumbnail(node: NodeDoc, box: { x: number; y: number; w: number; h: number }, surface: DrawSurface): void {
  surface.push({ op: "rect", x: box.x, y: box.y, w: box.w, h: box.h, fill: "#cfd8dc" });
  surface.push({ op: "frame", x: box.x, y: box.y, w: box.w, h: box.h, stroke: "#90a4ae" });
}

function centerOf(view: ViewState, doc: NetworkDoc, nodeId: string): [number, number] | null {
  if (!(nodeId in doc.nodes)) return null;
  const rect = nodeScreenRect(view, doc, nodeId);
  return [(rect[0] + rect[2]) / 2, (rect[1] + rect[3]) / 2];
}
