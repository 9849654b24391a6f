"""Canonical JSON encoding of the document model.

Canonical form: UTF-8, object keys sorted, compact separators, floats in
shortest round-trip decimal form (Python repr), no NaN/Infinity. Ordered
string maps (metadata, event params) are encoded as pair arrays so their
order survives the key-sorting rule.
"""

from __future__ import annotations

import json
from typing import Any, Callable

from combine.knowledge.model import (
    Anchor,
    AppNode,
    CellAnchor,
    Edge,
    InteractionEvent,
    NodeAnchor,
)
from combine.knowledge.table import Column, DataTable
from combine.knowledge.values import (
    KIND_BLOB,
    KIND_IDENTIFIER,
    KIND_NUMBER,
    KIND_REMOTE,
    KIND_SEQUENCE,
    KIND_STRUCTURE,
    KIND_TEXT,
    BioSequence,
    BlobRef,
    CellValue,
    ChemicalStructure,
    Identifier,
    Number,
    RemoteRef,
    Text,
)


def canonical_dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False, allow_nan=False)


class ErrorSink:
    """Collects decode problems so a whole document is reported, not just the first."""

    def __init__(self):
        self.problems: list[str] = []

    def add(self, path: str, message: str) -> None:
        self.problems.append(f"{path}: {message}")


def cell_to_doc(value: CellValue) -> Any:
    if value is None:
        return None
    if isinstance(value, Text):
        return value.value
    if isinstance(value, Number):
        return value.value
    if isinstance(value, Identifier):
        return {"namespace": value.namespace, "value": value.value}
    if isinstance(value, ChemicalStructure):
        return value.smiles
    if isinstance(value, BioSequence):
        return {"alphabet": value.alphabet, "sequence": value.sequence}
    if isinstance(value, RemoteRef):
        return {"url": value.url, "media_type": value.media_type, "policy": value.policy}
    if isinstance(value, BlobRef):
        return {"sha256": value.sha256, "media_type": value.media_type}
    raise TypeError(f"not a cell value: {value!r}")


_CELL_DECODERS: dict[str, Callable[[Any], CellValue]] = {
    KIND_TEXT: lambda raw: Text(_expect(raw, str)),
    KIND_NUMBER: lambda raw: Number(float(_expect(raw, (int, float)))),
    KIND_STRUCTURE: lambda raw: ChemicalStructure(_expect(raw, str)),
    KIND_IDENTIFIER: lambda raw: Identifier(
        namespace=_expect(raw["namespace"], str), value=_expect(raw["value"], str)
    ),
    KIND_SEQUENCE: lambda raw: BioSequence(
        alphabet=_expect(raw["alphabet"], str), sequence=_expect(raw["sequence"], str)
    ),
    KIND_REMOTE: lambda raw: RemoteRef(
        url=_expect(raw["url"], str),
        media_type=_expect(raw["media_type"], str),
        policy=_expect(raw["policy"], str),
    ),
    KIND_BLOB: lambda raw: BlobRef(
        sha256=_expect(raw["sha256"], str), media_type=_expect(raw["media_type"], str)
    ),
}


def _expect(raw: Any, types) -> Any:
    if isinstance(raw, bool) or not isinstance(raw, types):
        raise ValueError(f"unexpected value {raw!r}")
    return raw


def cell_from_doc(raw: Any, kind: str, errors: ErrorSink, path: str) -> CellValue:
    if raw is None:
        return None
    decoder = _CELL_DECODERS.get(kind)
    if decoder is None:
        errors.add(path, f"unknown column kind {kind!r}")
        return None
    try:
        return decoder(raw)
    except (KeyError, TypeError, ValueError) as exc:
        errors.add(path, f"cannot decode {kind} cell: {exc}")
        return None


def table_to_doc(table: DataTable) -> dict:
    return {
        "columns": [{"name": c.name, "kind": c.kind} for c in table.columns],
        "rows": [[cell_to_doc(cell) for cell in row] for row in table.rows],
    }


def table_from_doc(doc: Any, errors: ErrorSink, path: str) -> DataTable:
    if not isinstance(doc, dict):
        errors.add(path, "table must be an object")
        return DataTable()
    columns = []
    for i, raw in enumerate(_as_list(doc.get("columns"), errors, f"{path}.columns")):
        if isinstance(raw, dict) and isinstance(raw.get("name"), str) and isinstance(raw.get("kind"), str):
            columns.append(Column(name=raw["name"], kind=raw["kind"]))
        else:
            errors.add(f"{path}.columns[{i}]", "column needs string name and kind")
    rows = []
    for ri, raw_row in enumerate(_as_list(doc.get("rows"), errors, f"{path}.rows")):
        if not isinstance(raw_row, list):
            errors.add(f"{path}.rows[{ri}]", "row must be an array")
            continue
        row = []
        for ci, raw_cell in enumerate(raw_row):
            kind = columns[ci].kind if ci < len(columns) else ""
            row.append(cell_from_doc(raw_cell, kind, errors, f"{path}.rows[{ri}][{ci}]"))
        rows.append(row)
    return DataTable(columns=columns, rows=rows)


def _as_list(raw: Any, errors: ErrorSink, path: str) -> list:
    if raw is None:
        return []
    if not isinstance(raw, list):
        errors.add(path, "expected an array")
        return []
    return raw


def anchor_to_doc(anchor: Anchor) -> dict:
    if isinstance(anchor, NodeAnchor):
        return {"node": anchor.node}
    return {"node": anchor.node, "row": anchor.row, "col": anchor.col}


def anchor_from_doc(doc: Any, errors: ErrorSink, path: str) -> Anchor | None:
    if not isinstance(doc, dict) or not isinstance(doc.get("node"), str):
        errors.add(path, "anchor needs a node id")
        return None
    if "row" in doc or "col" in doc:
        row, col = doc.get("row"), doc.get("col")
        if not isinstance(row, int) or not isinstance(col, int) or isinstance(row, bool) or isinstance(col, bool):
            errors.add(path, "cell anchor needs integer row and col")
            return None
        return CellAnchor(node=doc["node"], row=row, col=col)
    return NodeAnchor(node=doc["node"])


def pairs_to_doc(mapping: dict[str, str]) -> list[list[str]]:
    return [[k, v] for k, v in mapping.items()]


def pairs_from_doc(doc: Any, errors: ErrorSink, path: str) -> dict[str, str]:
    out: dict[str, str] = {}
    for i, pair in enumerate(_as_list(doc, errors, path)):
        if (
            isinstance(pair, list)
            and len(pair) == 2
            and isinstance(pair[0], str)
            and isinstance(pair[1], str)
        ):
            if pair[0] in out:
                errors.add(f"{path}[{i}]", f"duplicate key {pair[0]!r}")
            out[pair[0]] = pair[1]
        else:
            errors.add(f"{path}[{i}]", "expected a [string, string] pair")
    return out


def node_to_doc(node: AppNode) -> dict:
    return {
        "id": node.id,
        "kind": node.kind,
        "title": node.title,
        "annotation": node.annotation,
        "table": table_to_doc(node.table),
        "metadata": pairs_to_doc(node.metadata),
        "created_seq": node.created_seq,
    }


def node_from_doc(doc: Any, errors: ErrorSink, path: str) -> AppNode | None:
    if not isinstance(doc, dict):
        errors.add(path, "node must be an object")
        return None
    node_id = doc.get("id")
    if not isinstance(node_id, str) or not node_id:
        errors.add(path, "node needs a string id")
        return None
    return AppNode(
        id=node_id,
        kind=_str_field(doc, "kind", errors, path),
        title=_str_field(doc, "title", errors, path),
        annotation=_str_field(doc, "annotation", errors, path),
        table=table_from_doc(doc.get("table"), errors, f"{path}.table"),
        metadata=pairs_from_doc(doc.get("metadata"), errors, f"{path}.metadata"),
        created_seq=_int_field(doc, "created_seq", errors, path),
    )


def edge_to_doc(edge: Edge) -> dict:
    return {
        "id": edge.id,
        "source": anchor_to_doc(edge.source),
        "target": anchor_to_doc(edge.target),
        "kind": edge.kind,
        "directed": edge.directed,
        "annotation": edge.annotation,
    }


def edge_from_doc(doc: Any, errors: ErrorSink, path: str) -> Edge | None:
    if not isinstance(doc, dict):
        errors.add(path, "edge must be an object")
        return None
    edge_id = doc.get("id")
    if not isinstance(edge_id, str) or not edge_id:
        errors.add(path, "edge needs a string id")
        return None
    source = anchor_from_doc(doc.get("source"), errors, f"{path}.source")
    target = anchor_from_doc(doc.get("target"), errors, f"{path}.target")
    if source is None or target is None:
        return None
    return Edge(
        id=edge_id,
        source=source,
        target=target,
        kind=_str_field(doc, "kind", errors, path),
        directed=bool(doc.get("directed", True)),
        annotation=_str_field(doc, "annotation", errors, path),
    )


def event_to_doc(event: InteractionEvent) -> dict:
    return {
        "seq": event.seq,
        "timestamp": event.timestamp,
        "action": event.action,
        "source": None if event.source is None else anchor_to_doc(event.source),
        "params": pairs_to_doc(event.params),
        "produced_nodes": list(event.produced_nodes),
        "produced_edges": list(event.produced_edges),
    }


def event_from_doc(doc: Any, errors: ErrorSink, path: str) -> InteractionEvent | None:
    if not isinstance(doc, dict):
        errors.add(path, "event must be an object")
        return None
    source = doc.get("source")
    return InteractionEvent(
        seq=_int_field(doc, "seq", errors, path),
        timestamp=_int_field(doc, "timestamp", errors, path),
        action=_str_field(doc, "action", errors, path),
        source=None if source is None else anchor_from_doc(source, errors, f"{path}.source"),
        params=pairs_from_doc(doc.get("params"), errors, f"{path}.params"),
        produced_nodes=_str_list(doc.get("produced_nodes"), errors, f"{path}.produced_nodes"),
        produced_edges=_str_list(doc.get("produced_edges"), errors, f"{path}.produced_edges"),
    )


def _str_field(doc: dict, key: str, errors: ErrorSink, path: str) -> str:
    raw = doc.get(key, "")
    if not isinstance(raw, str):
        errors.add(f"{path}.{key}", "expected a string")
        return ""
    return raw


def _int_field(doc: dict, key: str, errors: ErrorSink, path: str) -> int:
    raw = doc.get(key, 0)
    if isinstance(raw, bool) or not isinstance(raw, int):
        errors.add(f"{path}.{key}", "expected an integer")
        return 0
    return raw


def _str_list(raw: Any, errors: ErrorSink, path: str) -> list[str]:
    out = []
    for i, item in enumerate(_as_list(raw, errors, path)):
        if isinstance(item, str):
            out.append(item)
        else:
            errors.add(f"{path}[{i}]", "expected a string")
    return out
