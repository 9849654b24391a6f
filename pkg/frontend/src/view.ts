/** Network-canvas view state: pan/zoom transform between world and screen. */

import type { AnchorDoc } from "./types.js";

export const MIN_ZOOM = 0.05;
export const MAX_ZOOM = 8.0;

export interface ViewState {
  pan: [number, number]; // world coordinate at the screen origin
  zoom: number;
  width: number; // canvas px
  height: number;
  selected?: string;
  hover?: AnchorDoc;
}

export function makeView(width: number, height: number): ViewState {
  return { pan: [0, 0], zoom: 1.0, width, height };
}

export function clampZoom(zoom: number): number {
  return Math.min(Math.max(zoom, MIN_ZOOM), MAX_ZOOM);
}

export function worldToScreen(view: ViewState, p: [number, number]): [number, number] {
  return [(p[0] - view.pan[0]) * view.zoom, (p[1] - view.pan[1]) * view.zoom];
}

export function screenToWorld(view: ViewState, s: [number, number]): [number, number] {
  return [s[0] / view.zoom + view.pan[0], s[1] / view.zoom + view.pan[1]];
}

/** Zoom about a screen point, keeping the world point under it fixed. */
export function zoomAt(view: ViewState, screen: [number, number], factor: number): ViewState {
  const anchor = screenToWorld(view, screen);
  const zoom = clampZoom(view.zoom * factor);
  const pan: [number, number] = [anchor[0] - screen[0] / zoom, anchor[1] - screen[1] / zoom];
  return { ...view, zoom, pan };
}

export function panByScreen(view: ViewState, dx: number, dy: number): ViewState {
  return { ...view, pan: [view.pan[0] - dx / view.zoom, view.pan[1] - dy / view.zoom] };
}

/** Center the viewport on a world point. */
export function centerOn(view: ViewState, p: [number, number]): ViewState {
  return {
    ...view,
    pan: [p[0] - view.width / 2 / view.zoom, p[1] - view.height / 2 / view.zoom],
  };
}
