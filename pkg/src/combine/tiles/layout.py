"""Deterministic graph layout: seeded force-directed placement and file import.

Positions are keyed by string node ids; graphs laid out in-process use the
node index as its id ("0", "1", ...). The force pass is Fruchterman-Reingold
style with a fixed-seed circular start, so identical (graph, seed,
iterations) inputs give bitwise-identical coordinates on every platform.
"""

from __future__ import annotations

import math
import random

import numpy as np

from combine.analysis.graph import WeightedGraph

LAYOUT_NODE_LIMIT = 50_000

Point = tuple[float, float]
LayoutPositions = dict[str, Point]


class LayoutSizeError(ValueError):
    pass


def force_layout(graph: WeightedGraph, seed: int = 0, iterations: int = 50) -> LayoutPositions:
    """Lay out a graph deterministically; O(n^2) per iteration, guarded at 50k nodes."""
    n = graph.n
    if n > LAYOUT_NODE_LIMIT:
        raise LayoutSizeError(
            f"{n} nodes exceeds the in-process layout guard ({LAYOUT_NODE_LIMIT}); "
            "lay out externally and use import_layout"
        )
    if n == 0:
        return {}
    if n == 1:
        return {"0": (0.0, 0.0)}

    rng = random.Random(seed)
    rotation = rng.random() * 2.0 * math.pi
    radius = math.sqrt(n)
    angles = rotation + 2.0 * math.pi * np.arange(n, dtype=np.float64) / n
    pos = np.stack([radius * np.cos(angles), radius * np.sin(angles)], axis=1)

    k = math.sqrt((2.0 * radius) ** 2 / n)  # ideal pairwise spacing
    edge_u = np.array([e.u for e in graph.edges], dtype=np.int64)
    edge_v = np.array([e.v for e in graph.edges], dtype=np.int64)

    temperature = radius / 4.0
    cooling = temperature / max(iterations, 1)
    for _ in range(iterations):
        diff = pos[:, None, :] - pos[None, :, :]
        dist2 = (diff * diff).sum(axis=2)
        np.fill_diagonal(dist2, 1.0)
        dist2 = np.maximum(dist2, 1e-12)
        # repulsion k^2 / d along each pair vector
        disp = (diff * (k * k / dist2)[:, :, None]).sum(axis=1)
        if len(edge_u):
            evec = pos[edge_u] - pos[edge_v]
            edist = np.sqrt(np.maximum((evec * evec).sum(axis=1), 1e-12))
            pull = evec * (edist / k)[:, None]
            np.subtract.at(disp, edge_u, pull)
            np.add.at(disp, edge_v, pull)
        length = np.sqrt(np.maximum((disp * disp).sum(axis=1), 1e-12))
        step = np.minimum(length, temperature) / length
        pos += disp * step[:, None]
        temperature = max(temperature - cooling, 0.01)

    return {str(i): (float(pos[i, 0]), float(pos[i, 1])) for i in range(n)}


def import_layout(text: str) -> LayoutPositions:
    """Parse `id x y` lines into positions; duplicate ids are an error."""
    positions: LayoutPositions = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'id x y', got {raw!r}")
        node_id = parts[0]
        if node_id in positions:
            raise ValueError(f"line {lineno}: duplicate id {node_id!r}")
        try:
            x, y = float(parts[1]), float(parts[2])
        except ValueError:
            raise ValueError(f"line {lineno}: malformed coordinates in {raw!r}") from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ValueError(f"line {lineno}: non-finite coordinates")
        positions[node_id] = (x, y)
    return positions


def export_layout(positions: LayoutPositions) -> str:
    lines = [f"{node_id} {x!r} {y!r}" for node_id, (x, y) in sorted(positions.items())]
    return "\n".join(lines) + ("\n" if lines else "")


def layout_bbox(positions: LayoutPositions) -> tuple[float, float, float, float]:
    if not positions:
        raise ValueError("no positions")
    xs = [p[0] for p in positions.values()]
    ys = [p[1] for p in positions.values()]
    return (min(xs), min(ys), max(xs), max(ys))


def positions_for_graph(positions: LayoutPositions, n: int) -> np.ndarray:
    """Dense (n, 2) array for node ids "0".."n-1"; missing nodes are an error."""
    out = np.empty((n, 2), dtype=np.float64)
    missing = []
    for i in range(n):
        point = positions.get(str(i))
        if point is None:
            missing.append(str(i))
            continue
        out[i, 0], out[i, 1] = point
    if missing:
        preview = ", ".join(missing[:5])
        raise ValueError(f"{len(missing)} nodes lack positions (e.g. {preview})")
    return out
