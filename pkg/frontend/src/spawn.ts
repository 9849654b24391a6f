/** Interaction-triggered spawning: one POST /interact, then place the child
 * next to its parent (80 px right, cascading down on collision) and move
 * focus to it. All state comes back from the server; the UI holds nothing
 * that a fresh GET /networks/{id} would not rebuild. */

import { CombineApi } from "./api.js";
import type { AnchorDoc, NetworkDoc } from "./types.js";

export const SPAWN_OFFSET_X = 80;
export const SPAWN_CASCADE_Y = 40;
const COLLISION_RADIUS = 8;

export interface SpawnResult {
  nodeId: string;
  edgeId: string;
  doc: NetworkDoc;
}

export function childPlacement(
  positions: Record<string, [number, number]>,
  parent: string,
): [number, number] {
  const [px, py] = positions[parent] ?? [0, 0];
  let x = px + SPAWN_OFFSET_X;
  let y = py;
  const taken = Object.values(positions);
  const collides = () =>
    taken.some(([tx, ty]) => Math.abs(tx - x) < COLLISION_RADIUS && Math.abs(ty - y) < COLLISION_RADIUS);
  while (collides()) {
    y += SPAWN_CASCADE_Y;
  }
  return [x, y];
}

export async function spawnInteraction(
  api: CombineApi,
  networkId: string,
  anchor: AnchorDoc,
  action: string,
  params: Record<string, string> = {},
): Promise<SpawnResult> {
  const result = await api.interact(networkId, anchor, action, params);
  const nodeId = result.node_id!;
  const edgeId = result.edge_id!;
  // place the child relative to its parent, then refresh the snapshot
  const snapshot = await api.getNetwork(networkId);
  const [x, y] = childPlacement(snapshot.positions, anchor.node);
  await api.moveNode(networkId, nodeId, x, y);
  const doc = await api.getNetwork(networkId);
  return { nodeId, edgeId, doc };
}
