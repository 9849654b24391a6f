/** Per-kind app-node renderers plus the generic table-grid fallback.
 *
 * Every renderer draws into a node-local rectangle and declares which action
 * a double-click on a cell triggers. Unknown node kinds fall back to the
 * generic grid, which shows the current zoom level and row/column numbers.
 */

import type { DrawSurface } from "./draw.js";
import type { NodeDoc } from "./types.js";
import { cellText } from "./types.js";

export interface RenderBox {
  x: number;
  y: number;
  w: number;
  h: number;
  zoom: number;
}

export type Renderer = (node: NodeDoc, box: RenderBox, surface: DrawSurface) => void;

const HEADER = 16;

function chrome(node: NodeDoc, box: RenderBox, surface: DrawSurface, fill = "#ffffff"): void {
  surface.push({ op: "rect", x: box.x, y: box.y, w: box.w, h: box.h, fill });
  surface.push({ op: "rect", x: box.x, y: box.y, w: box.w, h: HEADER, fill: "#dde3ea" });
  surface.push({ op: "text", x: box.x + 4, y: box.y + 12, text: node.title, size: 11 });
  surface.push({ op: "frame", x: box.x, y: box.y, w: box.w, h: box.h, stroke: "#5b6770" });
}

/** Generic data-table grid: zoom level badge plus row and column numbers. */
export function genericTableRenderer(node: NodeDoc, box: RenderBox, surface: DrawSurface): void {
  chrome(node, box, surface);
  surface.push({
    op: "text",
    x: box.x + 4,
    y: box.y + HEADER + 12,
    text: `z=${box.zoom.toFixed(2)}`,
    size: 10,
  });
  const { columns, rows } = node.table;
  const left = box.x + 30;
  const top = box.y + HEADER + 18;
  const colWidth = columns.length ? Math.max((box.w - 34) / columns.length, 24) : 0;
  columns.forEach((column, ci) => {
    surface.push({ op: "text", x: left + ci * colWidth, y: top, text: `${ci}:${column.name}`, size: 9 });
  });
  const rowHeight = 12;
  const maxRows = Math.max(Math.floor((box.h - HEADER - 26) / rowHeight), 0);
  rows.slice(0, maxRows).forEach((row, ri) => {
    const y = top + (ri + 1) * rowHeight;
    surface.push({ op: "text", x: box.x + 4, y, text: String(ri), size: 9 });
    row.forEach((cell, ci) => {
      surface.push({ op: "text", x: left + ci * colWidth, y, text: cellText(cell).slice(0, 14), size: 9 });
    });
  });
}

function heatmapRenderer(node: NodeDoc, box: RenderBox, surface: DrawSurface): void {
  chrome(node, box, surface);
  const { columns, rows } = node.table;
  if (!columns.length || !rows.length) return;
  const cw = (box.w - 8) / columns.length;
  const ch = Math.min((box.h - HEADER - 8) / rows.length, 14);
  rows.forEach((row, ri) => {
    row.forEach((cell, ci) => {
      const v = typeof cell === "number" ? Math.min(Math.max(cell, 0), 1) : null;
      const fill = v === null ? "#eeeeee" : rampColor(v);
      surface.push({
        op: "rect",
        x: box.x + 4 + ci * cw,
        y: box.y + HEADER + 4 + ri * ch,
        w: cw - 1,
        h: ch - 1,
        fill,
      });
    });
  });
}

/** Red -> yellow -> green, matching the analysis ramp. */
export function rampColor(t: number): string {
  const channel = (v: number) => Math.round(v).toString(16).padStart(2, "0");
  if (t <= 0.5) return `#ff${channel(255 * (t / 0.5))}00`;
  return `#${channel(255 * ((1 - t) / 0.5))}ff00`;
}

function dendrogramRenderer(node: NodeDoc, box: RenderBox, surface: DrawSurface): void {
  chrome(node, box, surface);
  const merges = node.table.rows;
  if (!merges.length) return;
  const maxHeight = Math.max(...merges.map((m) => Number(m[2]) || 0), 1e-9);
  const innerW = box.w - 8;
  merges.forEach((merge, i) => {
    const y = box.y + HEADER + 6 + i * Math.max((box.h - HEADER - 10) / merges.length, 6);
    const span = (Number(merge[2]) / maxHeight) * innerW;
    surface.push({
      op: "line",
      x0: box.x + 4,
      y0: y,
      x1: box.x + 4 + span,
      y1: y,
      stroke: "#37474f",
    });
  });
}

function imageRenderer(node: NodeDoc, box: RenderBox, surface: DrawSurface): void {
  chrome(node, box, surface, "#f4f4f4");
  const cell = node.table.rows[0]?.[0];
  const src = cellText(cell);
  surface.push({
    op: "image",
    x: box.x + 4,
    y: box.y + HEADER + 4,
    w: box.w - 8,
    h: box.h - HEADER - 8,
    src,
  });
}

function sequenceRenderer(node: NodeDoc, box: RenderBox, surface: DrawSurface): void {
  chrome(node, box, surface);
  const row = node.table.rows[0];
  if (!row) return;
  const sequence = cellText(row[row.length - 1]);
  const perLine = Math.max(Math.floor((box.w - 8) / 7), 10);
  const lines = Math.max(Math.floor((box.h - HEADER - 8) / 12), 0);
  for (let i = 0; i < lines && i * perLine < sequence.length; i++) {
    surface.push({
      op: "text",
      x: box.x + 4,
      y: box.y + HEADER + 12 + i * 12,
      text: sequence.slice(i * perLine, (i + 1) * perLine),
      size: 9,
    });
  }
}

function scatterRenderer(node: NodeDoc, box: RenderBox, surface: DrawSurface): void {
  chrome(node, box, surface);
  const rows = node.table.rows;
  const xs = rows.map((r) => Number(r[0]) || 0);
  const ys = rows.map((r) => Number(r[1]) || 0);
  const xMax = Math.max(...xs, 1);
  const yMax = Math.max(...ys, 1);
  rows.forEach((_, i) => {
    surface.push({
      op: "rect",
      x: box.x + 4 + (xs[i] / xMax) * (box.w - 12),
      y: box.y + HEADER + 4 + (ys[i] / yMax) * (box.h - HEADER - 12),
      w: 3,
      h: 3,
      fill: "#1565c0",
    });
  });
}

const RENDERERS: Record<string, Renderer> = {
  "structure-table": genericTableRenderer,
  "property-table": genericTableRenderer,
  "activity-table": genericTableRenderer,
  heatmap: heatmapRenderer,
  dendrogram: dendrogramRenderer,
  image: imageRenderer,
  "sequence-viewer": sequenceRenderer,
  scatter: scatterRenderer,
  chord: scatterRenderer,
  "grna-tool": genericTableRenderer,
};

export function rendererFor(kind: string): Renderer {
  return RENDERERS[kind] ?? genericTableRenderer;
}

export function isFallback(kind: string): boolean {
  return !(kind in RENDERERS);
}

/** Double-clicking a cell triggers the action for its content, if any. */
export function actionForCell(node: NodeDoc, row: number, col: number): string | null {
  const column = node.table.columns[col];
  const cell = node.table.rows[row]?.[col];
  if (!column || cell === null || cell === undefined) return null;
  if (column.kind === "chemical-structure") return "similarity-search";
  if (column.kind === "bio-sequence") {
    const alphabet = (cell as { alphabet?: string }).alphabet;
    return alphabet === "DNA" ? "grna-find-sites" : null;
  }
  if (column.kind === "identifier") {
    const ns = (cell as { namespace?: string }).namespace;
    if (ns === "pdb") return "open-pdb-image";
    if (ns === "uniprot") return "open-sequence";
    if (ns === "chembl") return "activities";
  }
  return null;
}

/** Context-menu actions applying to the whole node. */
export function menuActionsFor(kind: string): string[] {
  if (kind === "structure-table") return ["cluster", "calc-properties", "heatmap", "chord"];
  return [];
}
