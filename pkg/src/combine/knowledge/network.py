"""The knowledge network: app nodes, anchored edges, append-only event log.

Every mutation appends exactly one InteractionEvent carrying enough recorded
state (explicit ids, canonical param strings) for replay to rebuild a
byte-identical document without re-running any remote fetch. Operations on
one network are not thread-safe; callers serialize writers per network.
"""

from __future__ import annotations

import hashlib
import json
import secrets
import time
from dataclasses import dataclass, field
from typing import Callable

from combine.knowledge import codec
from combine.knowledge.model import (
    EDGE_REFERENCE,
    EDGE_SPAWN,
    Anchor,
    AppNode,
    CellAnchor,
    Edge,
    InteractionEvent,
    NodeAnchor,
)
from combine.knowledge.table import DataTable
from combine.knowledge.values import CellValue, RemoteRef, BlobRef

# Actions handled by the network itself; registry actions may not shadow them.
RESERVED_ACTIONS = frozenset(
    ["create_node", "add_edge", "annotate", "delete_node", "move_node", "resolve_lazy"]
)


class NetworkError(ValueError):
    pass


class AnchorError(NetworkError):
    pass


class UnknownActionError(NetworkError):
    pass


class ActionError(NetworkError):
    """A registered action handler failed; names the action and anchor."""

    def __init__(self, action: str, anchor: Anchor, cause: Exception):
        super().__init__(f"action {action!r} failed at {anchor}: {cause}")
        self.action = action
        self.anchor = anchor
        self.cause = cause


def new_id() -> str:
    return secrets.token_hex(16)


@dataclass
class ResolveOutcome:
    node: str
    row: int
    col: int
    url: str
    sha256: str = ""
    error: str = ""


@dataclass
class ResolveReport:
    resolved: list[ResolveOutcome] = field(default_factory=list)
    failures: list[ResolveOutcome] = field(default_factory=list)
    blobs: dict[str, bytes] = field(default_factory=dict)


@dataclass
class KnowledgeNetwork:
    id: str
    annotation: str = ""
    nodes: dict[str, AppNode] = field(default_factory=dict)
    edges: dict[str, Edge] = field(default_factory=dict)
    positions: dict[str, tuple[float, float]] = field(default_factory=dict)
    events: list[InteractionEvent] = field(default_factory=list)

    @classmethod
    def create(cls, network_id: str | None = None, annotation: str = "") -> "KnowledgeNetwork":
        return cls(id=network_id or new_id(), annotation=annotation)

    # -- anchors ----------------------------------------------------------

    def resolve_anchor(self, anchor: Anchor) -> AppNode:
        """Return the anchored node, raising AnchorError when it dangles."""
        if not isinstance(anchor, (NodeAnchor, CellAnchor)):
            raise AnchorError(f"not an anchor: {anchor!r}")
        node = self.nodes.get(anchor.node)
        if node is None:
            raise AnchorError(f"anchor references unknown node {anchor.node!r}")
        if isinstance(anchor, CellAnchor):
            rows, cols = node.table.shape
            if not (0 <= anchor.row < rows and 0 <= anchor.col < cols):
                raise AnchorError(
                    f"cell anchor ({anchor.row},{anchor.col}) outside {rows}x{cols} "
                    f"table of node {anchor.node!r}"
                )
        return node

    def anchored_data(self, anchor: Anchor) -> DataTable | CellValue:
        """The node's table for node anchors, the single cell for cell anchors."""
        node = self.resolve_anchor(anchor)
        if isinstance(anchor, CellAnchor):
            return node.table.rows[anchor.row][anchor.col]
        return node.table

    # -- events -----------------------------------------------------------

    def _append_event(
        self,
        action: str,
        source: Anchor | None,
        params: dict[str, str],
        produced_nodes: list[str],
        produced_edges: list[str],
        timestamp: int | None,
    ) -> InteractionEvent:
        event = InteractionEvent(
            seq=len(self.events) + 1,
            timestamp=int(time.time()) if timestamp is None else timestamp,
            action=action,
            source=source,
            params=dict(params),
            produced_nodes=produced_nodes,
            produced_edges=produced_edges,
        )
        self.events.append(event)
        return event

    def _fresh_node_id(self, explicit: str | None) -> str:
        node_id = explicit or new_id()
        if node_id in self.nodes:
            raise NetworkError(f"node id {node_id!r} already exists")
        return node_id

    def _fresh_edge_id(self, explicit: str | None) -> str:
        edge_id = explicit or new_id()
        if edge_id in self.edges:
            raise NetworkError(f"edge id {edge_id!r} already exists")
        return edge_id

    # -- operations -------------------------------------------------------

    def create_node(
        self,
        kind: str,
        title: str,
        table: DataTable,
        *,
        node_id: str | None = None,
        timestamp: int | None = None,
    ) -> str:
        table.check()
        node_id = self._fresh_node_id(node_id)
        params = {"kind": kind, "title": title, "table": codec.canonical_dumps(codec.table_to_doc(table))}
        event = self._append_event("create_node", None, params, [node_id], [], timestamp)
        self.nodes[node_id] = AppNode(
            id=node_id,
            kind=kind,
            title=title,
            table=DataTable(columns=list(table.columns), rows=[list(r) for r in table.rows]),
            created_seq=event.seq,
        )
        return node_id

    def interact(
        self,
        source: Anchor,
        action: str,
        params: dict[str, str],
        registry,
        *,
        node_id: str | None = None,
        edge_id: str | None = None,
        timestamp: int | None = None,
    ) -> tuple[str, str]:
        """Run a registered action at an anchor, spawning a connected child node."""
        handler = registry.get(action)
        if handler is None:
            raise UnknownActionError(f"unknown action {action!r}")
        source_node = self.resolve_anchor(source)
        try:
            child_kind, child_table = handler(source_node.kind, self.anchored_data(source), dict(params))
        except Exception as exc:
            raise ActionError(action, source, exc) from exc
        child_table.check()

        node_id = self._fresh_node_id(node_id)
        edge_id = self._fresh_edge_id(edge_id)
        event = self._append_event(action, source, params, [node_id], [edge_id], timestamp)
        self.nodes[node_id] = AppNode(
            id=node_id,
            kind=child_kind,
            title=params.get("title", action),
            table=child_table,
            created_seq=event.seq,
        )
        self.edges[edge_id] = Edge(
            id=edge_id,
            source=source,
            target=NodeAnchor(node=node_id),
            kind=EDGE_SPAWN,
            directed=True,
        )
        return node_id, edge_id

    def add_reference_edge(
        self,
        source: Anchor,
        target: Anchor,
        annotation: str = "",
        directed: bool = True,
        *,
        edge_id: str | None = None,
        timestamp: int | None = None,
    ) -> str:
        self.resolve_anchor(source)
        self.resolve_anchor(target)
        edge_id = self._fresh_edge_id(edge_id)
        params = {
            "target": codec.canonical_dumps(codec.anchor_to_doc(target)),
            "annotation": annotation,
            "directed": "true" if directed else "false",
        }
        self._append_event("add_edge", source, params, [], [edge_id], timestamp)
        self.edges[edge_id] = Edge(
            id=edge_id,
            source=source,
            target=target,
            kind=EDGE_REFERENCE,
            directed=directed,
            annotation=annotation,
        )
        return edge_id

    def annotate(self, target: str, text: str, *, timestamp: int | None = None) -> None:
        """Replace the annotation of a node, an edge, or the network itself."""
        if target != self.id and target not in self.nodes and target not in self.edges:
            raise NetworkError(f"unknown annotation target {target!r}")
        self._append_event("annotate", None, {"target": target, "text": text}, [], [], timestamp)
        if target == self.id:
            self.annotation = text
        elif target in self.nodes:
            self.nodes[target].annotation = text
        else:
            self.edges[target].annotation = text

    def delete_node(self, node_id: str, *, timestamp: int | None = None) -> None:
        """Remove a node, its position, and every incident edge."""
        if node_id not in self.nodes:
            raise NetworkError(f"unknown node {node_id!r}")
        self._append_event("delete_node", None, {"node": node_id}, [], [], timestamp)
        del self.nodes[node_id]
        self.positions.pop(node_id, None)
        incident = [
            e.id for e in self.edges.values() if e.source.node == node_id or e.target.node == node_id
        ]
        for eid in incident:
            del self.edges[eid]

    def move_node(self, node_id: str, x: float, y: float, *, timestamp: int | None = None) -> None:
        if node_id not in self.nodes:
            raise NetworkError(f"unknown node {node_id!r}")
        x, y = float(x), float(y)
        self._append_event(
            "move_node", None, {"node": node_id, "x": repr(x), "y": repr(y)}, [], [], timestamp
        )
        self.positions[node_id] = (x, y)

    def resolve_lazy(
        self, fetcher: Callable[[str], bytes], *, timestamp: int | None = None
    ) -> ResolveReport:
        """Materialize lazy remote-ref cells into blob-refs via the fetcher.

        Failures leave cells untouched and are reported per cell; outcomes of
        successful fetches are recorded in the event so replay never refetches.
        """
        report = ResolveReport()
        targets = []
        for node_id in sorted(self.nodes):
            table = self.nodes[node_id].table
            for ri, row in enumerate(table.rows):
                for ci, cell in enumerate(row):
                    if isinstance(cell, RemoteRef) and cell.policy == "lazy":
                        targets.append((node_id, ri, ci, cell))
        for node_id, ri, ci, cell in targets:
            try:
                payload = fetcher(cell.url)
            except Exception as exc:
                report.failures.append(
                    ResolveOutcome(node=node_id, row=ri, col=ci, url=cell.url, error=str(exc))
                )
                continue
            digest = hashlib.sha256(payload).hexdigest()
            report.blobs[digest] = payload
            report.resolved.append(
                ResolveOutcome(node=node_id, row=ri, col=ci, url=cell.url, sha256=digest)
            )
        if report.resolved:
            recorded = [
                {
                    "node": o.node,
                    "row": o.row,
                    "col": o.col,
                    "sha256": o.sha256,
                    "media_type": self.nodes[o.node].table.rows[o.row][o.col].media_type,
                }
                for o in report.resolved
            ]
            self._append_event(
                "resolve_lazy",
                None,
                {"resolved": codec.canonical_dumps(recorded)},
                [],
                [],
                timestamp,
            )
            self.apply_resolved(recorded)
        return report

    def apply_resolved(self, recorded: list[dict]) -> None:
        """Swap remote-ref cells for blob-refs per recorded resolve outcomes."""
        for item in recorded:
            node = self.nodes[item["node"]]
            cell = node.table.rows[item["row"]][item["col"]]
            if not isinstance(cell, RemoteRef):
                raise NetworkError(
                    f"recorded resolve target ({item['node']},{item['row']},{item['col']}) "
                    "is not a remote-ref"
                )
            node.table.rows[item["row"]][item["col"]] = BlobRef(
                sha256=item["sha256"], media_type=item["media_type"]
            )

    # -- queries ----------------------------------------------------------

    def spawn_parent(self, node_id: str) -> str | None:
        """The node this one was spawned from, if any."""
        for edge in self.edges.values():
            if edge.kind == EDGE_SPAWN and edge.target.node == node_id:
                return edge.source.node
        return None


def replay_params_table(params: dict[str, str]) -> DataTable:
    """Decode the canonical table string recorded in a create_node event."""
    errors = codec.ErrorSink()
    table = codec.table_from_doc(json.loads(params["table"]), errors, "params.table")
    if errors.problems:
        raise NetworkError("; ".join(errors.problems))
    return table
