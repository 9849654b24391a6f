/** Drawing abstraction: renderers emit ops, the browser surface rasterizes
 * them onto a canvas and tests record them. */

export type DrawOp =
  | { op: "rect"; x: number; y: number; w: number; h: number; fill: string }
  | { op: "frame"; x: number; y: number; w: number; h: number; stroke: string }
  | { op: "line"; x0: number; y0: number; x1: number; y1: number; stroke: string; arrow?: boolean }
  | { op: "text"; x: number; y: number; text: string; size: number }
  | { op: "image"; x: number; y: number; w: number; h: number; src: string }
  | { op: "error-placeholder"; x: number; y: number; w: number; h: number; message: string };

export interface DrawSurface {
  push(op: DrawOp): void;
}

export class RecordingSurface implements DrawSurface {
  ops: DrawOp[] = [];

  push(op: DrawOp): void {
    this.ops.push(op);
  }

  byKind(kind: DrawOp["op"]): DrawOp[] {
    return this.ops.filter((o) => o.op === kind);
  }

  texts(): string[] {
    return this.ops.filter((o): o is Extract<DrawOp, { op: "text" }> => o.op === "text").map((o) => o.text);
  }
}
