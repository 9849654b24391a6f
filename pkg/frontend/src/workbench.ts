/** Workbench controller: the DOM-free core the browser shell drives.
 *
 * Holds the latest server snapshot plus view state; every mutation goes
 * through the REST API and the canvas re-renders from the refreshed
 * document within the same cycle.
 */

import { ApiError, CombineApi } from "./api.js";
import { renderNetwork, RenderStats } from "./canvas.js";
import type { DrawSurface } from "./draw.js";
import { clickToRecenter, drawMinimap, isInsideMinimap, MinimapLayout } from "./minimap.js";
import { actionForCell } from "./renderers.js";
import { spawnInteraction } from "./spawn.js";
import type { AnchorDoc, NetworkDoc } from "./types.js";
import { centerOn, makeView, ViewState } from "./view.js";

export interface Toast {
  code: string;
  message: string;
}

export class Workbench {
  view: ViewState;
  doc: NetworkDoc | null = null;
  toasts: Toast[] = [];
  private eventCursor = 0;
  private minimap: MinimapLayout | null = null;

  constructor(
    private api: CombineApi,
    private networkId: string,
    width: number,
    height: number,
    private lodThreshold = 64,
  ) {
    this.view = makeView(width, height);
  }

  async load(): Promise<void> {
    this.doc = await this.api.getNetwork(this.networkId);
    this.eventCursor = this.doc.events.length;
  }

  /** Poll for new events; refresh the snapshot when anything changed. */
  async pollEvents(): Promise<boolean> {
    const page = await this.api.events(this.networkId, this.eventCursor);
    if (page.total > this.eventCursor) {
      await this.load();
      return true;
    }
    return false;
  }

  render(surface: DrawSurface): RenderStats {
    if (!this.doc) return { drawn: 0, thumbnails: 0, skipped: 0, errors: 0 };
    const stats = renderNetwork(this.view, this.doc, surface, this.lodThreshold);
    this.minimap = drawMinimap(this.view, this.doc, surface);
    return stats;
  }

  /** Double-click on a table cell: resolve its action and spawn the child. */
  async doubleClickCell(anchor: AnchorDoc): Promise<string | null> {
    if (!this.doc) return null;
    const node = this.doc.nodes[anchor.node];
    if (!node || anchor.row === undefined || anchor.col === undefined) return null;
    const action = actionForCell(node, anchor.row, anchor.col);
    if (!action) return null;
    return this.runAction(anchor, action);
  }

  /** Run a (possibly menu-chosen) action at an anchor; focus the child. */
  async runAction(anchor: AnchorDoc, action: string, params: Record<string, string> = {}): Promise<string | null> {
    try {
      const result = await spawnInteraction(this.api, this.networkId, anchor, action, params);
      this.doc = result.doc;
      this.eventCursor = this.doc.events.length;
      this.view = { ...centerOn(this.view, this.doc.positions[result.nodeId] ?? [0, 0]), selected: result.nodeId };
      return result.nodeId;
    } catch (err) {
      if (err instanceof ApiError) {
        this.toasts.push({ code: err.code, message: err.message });
        return null;
      }
      throw err;
    }
  }

  /** Canvas click: minimap recenter takes precedence over selection. */
  click(px: number, py: number): void {
    if (this.minimap && isInsideMinimap(this.minimap, px, py)) {
      this.view = clickToRecenter(this.view, this.minimap, px, py);
    }
  }
}
