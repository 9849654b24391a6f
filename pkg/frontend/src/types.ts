/** Canonical document shapes served by the REST API (format "combine/1"). */

export interface ColumnDoc {
  name: string;
  kind: string;
}

export interface TableDoc {
  columns: ColumnDoc[];
  rows: unknown[][];
}

export interface AnchorDoc {
  node: string;
  row?: number;
  col?: number;
}

export interface NodeDoc {
  id: string;
  kind: string;
  title: string;
  annotation: string;
  table: TableDoc;
  metadata: [string, string][];
  created_seq: number;
}

export interface EdgeDoc {
  id: string;
  source: AnchorDoc;
  target: AnchorDoc;
  kind: "spawn" | "reference";
  directed: boolean;
  annotation: string;
}

export interface EventDoc {
  seq: number;
  timestamp: number;
  action: string;
  source: AnchorDoc | null;
  params: [string, string][];
  produced_nodes: string[];
  produced_edges: string[];
}

export interface NetworkDoc {
  version: string;
  id: string;
  annotation: string;
  nodes: Record<string, NodeDoc>;
  edges: Record<string, EdgeDoc>;
  positions: Record<string, [number, number]>;
  events: EventDoc[];
}

export interface ManifestDoc {
  pyramid_id: string;
  zoom_range: [number, number];
  tile_size: number;
  bbox: [number, number, number, number];
  size_law: string;
  checksum: string;
  node_count: number;
  edge_count: number;
  drawn_edge_count: number;
  use_mst: boolean;
  palette: Record<string, [number, number, number]>;
}

export interface ApiErrorBody {
  code: string;
  message: string;
  detail?: Record<string, unknown>;
}

export function cellText(value: unknown): string {
  if (value === null || value === undefined) return "";
  if (typeof value === "string") return value;
  if (typeof value === "number") return String(value);
  if (typeof value === "object") {
    const obj = value as Record<string, unknown>;
    if ("value" in obj) return String(obj.value);
    if ("sequence" in obj) return String(obj.sequence);
    if ("url" in obj) return String(obj.url);
    if ("sha256" in obj) return String(obj.sha256).slice(0, 12);
  }
  return JSON.stringify(value);
}
