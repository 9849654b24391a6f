/** Node-level details-on-demand policy, same thresholds as the server. */

export type Rect = [number, number, number, number]; // x0, y0, x1, y1

export const DEFAULT_LOD_THRESHOLD = 64;

export type LodDecision = "skip" | "static-image" | "interactive";

export function lodDecide(node: Rect, viewport: Rect, threshold = DEFAULT_LOD_THRESHOLD): LodDecision {
  const [nx0, ny0, nx1, ny1] = node;
  const [vx0, vy0, vx1, vy1] = viewport;
  if (nx1 < vx0 || nx0 > vx1 || ny1 < vy0 || ny0 > vy1) return "skip";
  if (Math.max(nx1 - nx0, ny1 - ny0) < threshold) return "static-image";
  return "interactive";
}
