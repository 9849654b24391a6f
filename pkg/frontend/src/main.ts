/** Browser bootstrap: wires the workbench controller to a canvas element.
 *
 * Query parameters: ?api=http://localhost:8710&network=<id>
 */

import { CombineApi } from "./api.js";
import type { DrawOp, DrawSurface } from "./draw.js";
import { Workbench } from "./workbench.js";
import { panByScreen, zoomAt } from "./view.js";
import { nodeScreenRect, CARD_WIDTH } from "./canvas.js";

class Canvas2DSurface implements DrawSurface {
  constructor(private ctx: CanvasRenderingContext2D) {}

  push(op: DrawOp): void {
    const ctx = this.ctx;
    switch (op.op) {
      case "rect":
        ctx.fillStyle = op.fill;
        ctx.fillRect(op.x, op.y, op.w, op.h);
        break;
      case "frame":
        ctx.strokeStyle = op.stroke;
        ctx.strokeRect(op.x, op.y, op.w, op.h);
        break;
      case "line": {
        ctx.strokeStyle = op.stroke;
        ctx.beginPath();
        ctx.moveTo(op.x0, op.y0);
        ctx.lineTo(op.x1, op.y1);
        ctx.stroke();
        if (op.arrow) {
          const angle = Math.atan2(op.y1 - op.y0, op.x1 - op.x0);
          ctx.beginPath();
          ctx.moveTo(op.x1, op.y1);
          ctx.lineTo(op.x1 - 8 * Math.cos(angle - 0.4), op.y1 - 8 * Math.sin(angle - 0.4));
          ctx.lineTo(op.x1 - 8 * Math.cos(angle + 0.4), op.y1 - 8 * Math.sin(angle + 0.4));
          ctx.closePath();
          ctx.fillStyle = op.stroke;
          ctx.fill();
        }
        break;
      }
      case "text":
        ctx.fillStyle = "#263238";
        ctx.font = `${op.size}px monospace`;
        ctx.fillText(op.text, op.x, op.y);
        break;
      case "image": {
        const img = new Image();
        img.onload = () => ctx.drawImage(img, op.x, op.y, op.w, op.h);
        img.src = op.src;
        break;
      }
      case "error-placeholder":
        ctx.fillStyle = "#ffebee";
        ctx.fillRect(op.x, op.y, op.w, op.h);
        ctx.strokeStyle = "#c62828";
        ctx.strokeRect(op.x, op.y, op.w, op.h);
        ctx.fillStyle = "#c62828";
        ctx.font = "10px monospace";
        ctx.fillText("render error", op.x + 4, op.y + 14);
        break;
    }
  }
}

async function boot(): Promise<void> {
  const params = new URLSearchParams(location.search);
  const apiBase = params.get("api") ?? "http://localhost:8710";
  const api = new CombineApi(apiBase);

  let networkId = params.get("network");
  if (!networkId) {
    const doc = await api.createNetwork("workbench session");
    networkId = doc.id;
    history.replaceState(null, "", `?api=${encodeURIComponent(apiBase)}&network=${networkId}`);
  }

  const canvas = document.getElementById("canvas") as HTMLCanvasElement;
  canvas.width = window.innerWidth;
  canvas.height = window.innerHeight;
  const ctx = canvas.getContext("2d")!;
  const bench = new Workbench(api, networkId, canvas.width, canvas.height);
  await bench.load();

  const redraw = () => {
    ctx.clearRect(0, 0, canvas.width, canvas.height);
    ctx.fillStyle = "#fafafa";
    ctx.fillRect(0, 0, canvas.width, canvas.height);
    bench.render(new Canvas2DSurface(ctx));
    const toast = bench.toasts.at(-1);
    if (toast) {
      ctx.fillStyle = "#c62828";
      ctx.font = "12px sans-serif";
      ctx.fillText(`${toast.code}: ${toast.message}`, 12, canvas.height - 12);
    }
  };

  canvas.addEventListener("wheel", (e) => {
    e.preventDefault();
    bench.view = zoomAt(bench.view, [e.offsetX, e.offsetY], e.deltaY < 0 ? 1.2 : 1 / 1.2);
    redraw();
  });

  let dragging = false;
  canvas.addEventListener("mousedown", () => (dragging = true));
  canvas.addEventListener("mouseup", () => (dragging = false));
  canvas.addEventListener("mousemove", (e) => {
    if (dragging) {
      bench.view = panByScreen(bench.view, e.movementX, e.movementY);
      redraw();
    }
  });

  canvas.addEventListener("click", (e) => {
    bench.click(e.offsetX, e.offsetY);
    redraw();
  });

  canvas.addEventListener("dblclick", async (e) => {
    const hit = hitTestCell(bench, e.offsetX, e.offsetY);
    if (hit) {
      await bench.doubleClickCell(hit);
      redraw();
    }
  });

  window.setInterval(async () => {
    if (await bench.pollEvents()) redraw();
  }, 2000);

  redraw();
}

function hitTestCell(bench: Workbench, px: number, py: number) {
  if (!bench.doc) return null;
  for (const nodeId of Object.keys(bench.doc.nodes)) {
    const [x0, y0, x1, y1] = nodeScreenRect(bench.view, bench.doc, nodeId);
    if (px < x0 || px > x1 || py < y0 || py > y1) continue;
    const node = bench.doc.nodes[nodeId];
    if (!node.table.rows.length || !node.table.columns.length) return { node: nodeId };
    const headerPx = 34 * bench.view.zoom;
    const rowHeight = 12 * bench.view.zoom;
    const row = Math.min(
      Math.max(Math.floor((py - y0 - headerPx) / rowHeight), 0),
      node.table.rows.length - 1,
    );
    const colWidth = (CARD_WIDTH * bench.view.zoom) / node.table.columns.length;
    const col = Math.min(Math.floor((px - x0) / colWidth), node.table.columns.length - 1);
    return { node: nodeId, row, col };
  }
  return null;
}

boot().catch((err) => {
  document.body.textContent = `failed to start: ${err}`;
});
