export { ApiError, CombineApi } from "./api.js";
export type { FetchLike, MutationResult } from "./api.js";
export { CARD_HEIGHT, CARD_WIDTH, nodeScreenRect, renderNetwork } from "./canvas.js";
export type { RenderStats } from "./canvas.js";
export { RecordingSurface } from "./draw.js";
export type { DrawOp, DrawSurface } from "./draw.js";
export { DEFAULT_LOD_THRESHOLD, lodDecide } from "./lod.js";
export type { LodDecision, Rect } from "./lod.js";
export { clickToRecenter, drawMinimap, isInsideMinimap, lensRect, minimapLayout } from "./minimap.js";
export { actionForCell, genericTableRenderer, isFallback, menuActionsFor, rendererFor } from "./renderers.js";
export { childPlacement, spawnInteraction, SPAWN_CASCADE_Y, SPAWN_OFFSET_X } from "./spawn.js";
export {
  levelSide,
  MAX_ZOOM,
  pixelToWorld,
  TILE_SIZE,
  tileKey,
  tilesForViewport,
  worldToPixel,
} from "./tilemath.js";
export type { BBox, Point, TileCoord, Viewport } from "./tilemath.js";
export { nearestNode, TileViewer } from "./tileviewer.js";
export type { TileSource, TileViewerOptions } from "./tileviewer.js";
export { centerOn, clampZoom, makeView, panByScreen, screenToWorld, worldToScreen, zoomAt } from "./view.js";
export type { ViewState } from "./view.js";
export { Workbench } from "./workbench.js";
export type { Toast } from "./workbench.js";
export type {
  AnchorDoc,
  ApiErrorBody,
  ColumnDoc,
  EdgeDoc,
  EventDoc,
  ManifestDoc,
  NetworkDoc,
  NodeDoc,
  TableDoc,
} from "./types.js";
