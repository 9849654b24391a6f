/** Typed client for the workbench REST API. The UI never talks anywhere else. */

import type { AnchorDoc, ApiErrorBody, EventDoc, ManifestDoc, NetworkDoc } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  code: string;
  status: number;
  detail: Record<string, unknown>;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.code = body.code;
    this.status = status;
    this.detail = body.detail ?? {};
  }
}

export interface MutationResult {
  seq: number;
  node_id?: string | null;
  edge_id?: string | null;
}

export class CombineApi {
  constructor(
    private base: string,
    private fetchImpl: FetchLike = (url, init) => fetch(url, init),
  ) {
    this.base = base.replace(/\/$/, "");
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await this.fetchImpl(`${this.base}${path}`, init);
    if (!response.ok) {
      let envelope: ApiErrorBody;
      try {
        envelope = (await response.json()) as ApiErrorBody;
      } catch {
        envelope = { code: "http-error", message: `HTTP ${response.status}` };
      }
      throw new ApiError(response.status, envelope);
    }
    if (response.status === 204) return undefined as T;
    return (await response.json()) as T;
  }

  createNetwork(annotation = ""): Promise<NetworkDoc> {
    return this.request("POST", "/networks", { annotation });
  }

  getNetwork(id: string): Promise<NetworkDoc> {
    return this.request("GET", `/networks/${id}`);
  }

  events(id: string, offset = 0, limit = 100): Promise<{ events: EventDoc[]; total: number }> {
    return this.request("GET", `/networks/${id}/events?offset=${offset}&limit=${limit}`);
  }

  interact(
    id: string,
    anchor: AnchorDoc,
    action: string,
    params: Record<string, string> = {},
  ): Promise<MutationResult> {
    return this.request("POST", `/networks/${id}/interact`, { anchor, action, params });
  }

  addEdge(id: string, source: AnchorDoc, target: AnchorDoc, annotation = ""): Promise<MutationResult> {
    return this.request("POST", `/networks/${id}/edges`, { source, target, annotation });
  }

  annotate(id: string, target: string, text: string): Promise<MutationResult> {
    return this.request("POST", `/networks/${id}/annotate`, { target, text });
  }

  moveNode(id: string, node: string, x: number, y: number): Promise<MutationResult> {
    return this.request("POST", `/networks/${id}/positions`, { node, x, y });
  }

  replayCheck(id: string): Promise<{ equal: boolean; events: number }> {
    return this.request("POST", `/networks/${id}/replay-check`);
  }

  pyramidManifest(id: string): Promise<ManifestDoc> {
    return this.request("GET", `/pyramids/${id}/manifest`);
  }

  tileUrl(pyramidId: string, z: number, x: number, y: number): string {
    return `${this.base}/pyramids/${pyramidId}/tiles/${z}/${x}/${y}.png`;
  }
}
