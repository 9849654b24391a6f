import { describe, expect, it } from "vitest";

import { RecordingSurface } from "../src/draw.js";
import { actionForCell, genericTableRenderer, isFallback, menuActionsFor, rendererFor } from "../src/renderers.js";
import { renderNetwork } from "../src/canvas.js";
import { makeView } from "../src/view.js";
import type { NetworkDoc, NodeDoc } from "../src/types.js";

function structureNode(): NodeDoc {
  return {
    id: "n1",
    kind: "structure-table",
    title: "compounds",
    annotation: "",
    metadata: [],
    created_seq: 1,
    table: {
      columns: [
        { name: "smiles", kind: "chemical-structure" },
        { name: "pdb", kind: "identifier" },
      ],
      rows: [
        ["CCO", { namespace: "pdb", value: "1M63" }],
        ["c1ccccc1", null],
      ],
    },
  };
}

describe("renderers", () => {
  it("unknown kinds fall back to the generic grid", () => {
    expect(isFallback("mystery-kind")).toBe(true);
    expect(rendererFor("mystery-kind")).toBe(genericTableRenderer);
  });

  it("generic grid shows zoom level and row/column numbers", () => {
    const surface = new RecordingSurface();
    genericTableRenderer(structureNode(), { x: 0, y: 0, w: 220, h: 150, zoom: 1.25 }, surface);
    const texts = surface.texts();
    expect(texts).toContain("z=1.25");
    expect(texts).toContain("0:smiles");
    expect(texts).toContain("1:pdb");
    expect(texts).toContain("0");
    expect(texts).toContain("1");
  });

  it("cell double-click actions follow column kind and identifier namespace", () => {
    const node = structureNode();
    expect(actionForCell(node, 0, 0)).toBe("similarity-search");
    expect(actionForCell(node, 0, 1)).toBe("open-pdb-image");
    expect(actionForCell(node, 1, 1)).toBeNull(); // null cell: no action
  });

  it("identifier namespaces map to their tools", () => {
    const node = structureNode();
    node.table.columns[1] = { name: "acc", kind: "identifier" };
    node.table.rows[0][1] = { namespace: "uniprot", value: "P09581" };
    expect(actionForCell(node, 0, 1)).toBe("open-sequence");
    node.table.rows[0][1] = { namespace: "chembl", value: "CHEMBL25" };
    expect(actionForCell(node, 0, 1)).toBe("activities");
  });

  it("dna sequence cells launch the grna tool", () => {
    const node = structureNode();
    node.table.columns[0] = { name: "seq", kind: "bio-sequence" };
    node.table.rows[0][0] = { alphabet: "DNA", sequence: "ACGT" };
    expect(actionForCell(node, 0, 0)).toBe("grna-find-sites");
  });

  it("structure tables expose node-level menu actions", () => {
    expect(menuActionsFor("structure-table")).toEqual(["cluster", "calc-properties", "heatmap", "chord"]);
    expect(menuActionsFor("image")).toEqual([]);
  });
});

describe("render pipeline", () => {
  function doc(): NetworkDoc {
    const a = structureNode();
    const b: NodeDoc = { ...structureNode(), id: "n2", kind: "heatmap", title: "hm" };
    const c: NodeDoc = { ...structureNode(), id: "n3", title: "offscreen" };
    return {
      version: "combine/1",
      id: "net",
      annotation: "",
      nodes: { n1: a, n2: b, n3: c },
      edges: {
        e1: {
          id: "e1",
          source: { node: "n1" },
          target: { node: "n2" },
          kind: "spawn",
          directed: true,
          annotation: "",
        },
      },
      positions: { n1: [0, 0], n2: [300, 0], n3: [99_000, 0] },
      events: [],
    };
  }

  it("skips offscreen nodes, draws the rest, keeps spawn edges arrowed", () => {
    const surface = new RecordingSurface();
    const stats = renderNetwork(makeView(800, 600), doc(), surface);
    expect(stats.skipped).toBe(1);
    expect(stats.drawn).toBe(2);
    const lines = surface.byKind("line");
    expect(lines.some((l) => "arrow" in l && (l as { arrow?: boolean }).arrow)).toBe(true);
  });

  it("small zoom turns nodes into thumbnails", () => {
    const view = { ...makeView(800, 600), zoom: 0.1 };
    const surface = new RecordingSurface();
    const stats = renderNetwork(view, doc(), surface);
    expect(stats.thumbnails).toBeGreaterThan(0);
    expect(stats.drawn).toBe(0);
  });

  it("a failing renderer paints a placeholder without blanking the canvas", () => {
    const broken = doc();
    // malformed table: rows is not an array, the grid renderer will throw
    (broken.nodes.n1.table as { rows: unknown }).rows = null;
    const surface = new RecordingSurface();
    const stats = renderNetwork(makeView(800, 600), broken, surface);
    expect(stats.errors).toBe(1);
    expect(stats.drawn).toBe(1); // the healthy node still rendered
    expect(surface.byKind("error-placeholder").length).toBe(1);
  });
});
