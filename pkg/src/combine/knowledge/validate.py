"""Whole-document validation: every violation reported, errors vs warnings."""

from __future__ import annotations

from dataclasses import dataclass

from combine.knowledge.model import EDGE_REFERENCE, EDGE_SPAWN, CellAnchor, NodeAnchor


@dataclass(frozen=True)
class Issue:
    severity: str  # "error" | "warning"
    code: str
    message: str

    def __str__(self) -> str:
        return f"[{self.severity}] {self.code}: {self.message}"


def validate_network(net) -> list[Issue]:
    issues: list[Issue] = []
    err = lambda code, msg: issues.append(Issue("error", code, msg))
    warn = lambda code, msg: issues.append(Issue("warning", code, msg))

    for node in net.nodes.values():
        for problem in node.table.problems():
            err("table", f"node {node.id!r}: {problem}")

    for edge in net.edges.values():
        for label, anchor in (("source", edge.source), ("target", edge.target)):
            problem = _anchor_problem(net, anchor)
            if problem:
                err("anchor", f"edge {edge.id!r} {label}: {problem}")
        if edge.kind not in (EDGE_SPAWN, EDGE_REFERENCE):
            err("edge-kind", f"edge {edge.id!r}: unknown kind {edge.kind!r}")
        if edge.kind == EDGE_SPAWN:
            if not isinstance(edge.target, NodeAnchor):
                err("spawn-target", f"spawn edge {edge.id!r} must target a node anchor")
            if not edge.directed:
                err("spawn-directed", f"spawn edge {edge.id!r} must be directed")
        if edge.source.node == edge.target.node and edge.source == edge.target:
            warn("self-edge", f"edge {edge.id!r} links an anchor to itself")

    _check_parallel_edges(net, warn)
    _check_spawn_forest(net, err)

    for node_id in net.positions:
        if node_id not in net.nodes:
            err("position", f"position for unknown node {node_id!r}")

    for i, event in enumerate(net.events):
        if event.seq != i + 1:
            err("event-seq", f"event at index {i} has seq {event.seq}, expected {i + 1}")

    return issues


def _anchor_problem(net, anchor) -> str | None:
    node = net.nodes.get(anchor.node)
    if node is None:
        return f"references unknown node {anchor.node!r}"
    if isinstance(anchor, CellAnchor):
        rows, cols = node.table.shape
        if not (0 <= anchor.row < rows and 0 <= anchor.col < cols):
            return f"cell ({anchor.row},{anchor.col}) outside {rows}x{cols} table"
    return None


def _check_parallel_edges(net, warn) -> None:
    seen: dict[tuple, str] = {}
    for edge in net.edges.values():
        if edge.kind != EDGE_REFERENCE:
            continue
        key = (_anchor_key(edge.source), _anchor_key(edge.target))
        if key in seen:
            warn("parallel-edge", f"edges {seen[key]!r} and {edge.id!r} share endpoints")
        else:
            seen[key] = edge.id


def _check_spawn_forest(net, err) -> None:
    parent: dict[str, str] = {}
    for edge in net.edges.values():
        if edge.kind != EDGE_SPAWN:
            continue
        child = edge.target.node
        if child in parent:
            err("spawn-forest", f"node {child!r} has more than one incoming spawn edge")
        else:
            parent[child] = edge.source.node
    for start in parent:
        seen = {start}
        node = parent.get(start)
        while node is not None:
            if node in seen:
                err("spawn-cycle", f"spawn ancestry of {start!r} revisits {node!r}")
                break
            seen.add(node)
            node = parent.get(node)


def _anchor_key(anchor) -> tuple:
    if isinstance(anchor, CellAnchor):
        return (anchor.node, anchor.row, anchor.col)
    return (anchor.node,)
