"""Canonical persistence: save/load of `.combine.json` documents.

save(load(save(n))) is byte-identical to save(n); documents are UTF-8 with
sorted object keys and shortest round-trip float form. Loading reports every
problem found (parse position, decode paths, semantic validation), not just
the first.
"""

from __future__ import annotations

import json

from combine.knowledge import codec
from combine.knowledge.model import InteractionEvent
from combine.knowledge.network import KnowledgeNetwork
from combine.knowledge.validate import Issue, validate_network

FORMAT_VERSION = "combine/1"


class DocumentError(ValueError):
    """Malformed or invalid document; carries all collected issues."""

    def __init__(self, issues: list[str]):
        super().__init__("; ".join(issues) if issues else "invalid document")
        self.issues = issues


def network_to_doc(net: KnowledgeNetwork) -> dict:
    return {
        "version": FORMAT_VERSION,
        "id": net.id,
        "annotation": net.annotation,
        "nodes": {node_id: codec.node_to_doc(node) for node_id, node in net.nodes.items()},
        "edges": {edge_id: codec.edge_to_doc(edge) for edge_id, edge in net.edges.items()},
        "positions": {node_id: [x, y] for node_id, (x, y) in net.positions.items()},
        "events": [codec.event_to_doc(e) for e in net.events],
    }


def canonical_bytes(net: KnowledgeNetwork) -> bytes:
    return (codec.canonical_dumps(network_to_doc(net)) + "\n").encode("utf-8")


def save(net: KnowledgeNetwork) -> bytes:
    return canonical_bytes(net)


def load(data: bytes, strict: bool = True) -> KnowledgeNetwork:
    """Decode and validate a document; raises DocumentError listing all problems."""
    net, issues = load_with_issues(data)
    if strict and any(i.severity == "error" for i in issues):
        raise DocumentError([str(i) for i in issues if i.severity == "error"])
    return net


def load_with_issues(data: bytes) -> tuple[KnowledgeNetwork, list[Issue]]:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DocumentError([f"not UTF-8 at byte {exc.start}"]) from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise DocumentError([f"JSON parse error at byte {offset}: {exc.msg}"]) from exc
    if not isinstance(doc, dict):
        raise DocumentError(["document root must be an object"])
    version = doc.get("version")
    if version != FORMAT_VERSION:
        raise DocumentError([f"unsupported format version {version!r}, expected {FORMAT_VERSION!r}"])

    errors = codec.ErrorSink()
    net = KnowledgeNetwork(id=_network_id(doc, errors), annotation=_annotation(doc, errors))

    nodes = doc.get("nodes", {})
    if not isinstance(nodes, dict):
        errors.add("nodes", "expected an object")
        nodes = {}
    for key, raw in nodes.items():
        node = codec.node_from_doc(raw, errors, f"nodes[{key}]")
        if node is not None:
            if node.id != key:
                errors.add(f"nodes[{key}]", f"key does not match node id {node.id!r}")
            net.nodes[node.id] = node

    edges = doc.get("edges", {})
    if not isinstance(edges, dict):
        errors.add("edges", "expected an object")
        edges = {}
    for key, raw in edges.items():
        edge = codec.edge_from_doc(raw, errors, f"edges[{key}]")
        if edge is not None:
            if edge.id != key:
                errors.add(f"edges[{key}]", f"key does not match edge id {edge.id!r}")
            net.edges[edge.id] = edge

    positions = doc.get("positions", {})
    if not isinstance(positions, dict):
        errors.add("positions", "expected an object")
        positions = {}
    for key, raw in positions.items():
        if (
            isinstance(raw, list)
            and len(raw) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in raw)
        ):
            net.positions[key] = (float(raw[0]), float(raw[1]))
        else:
            errors.add(f"positions[{key}]", "expected [x, y] numbers")

    for i, raw in enumerate(codec._as_list(doc.get("events"), errors, "events")):
        event = codec.event_from_doc(raw, errors, f"events[{i}]")
        if event is not None:
            net.events.append(event)

    issues = [Issue(severity="error", code="decode", message=p) for p in errors.problems]
    issues.extend(validate_network(net))
    return net, issues


def _network_id(doc: dict, errors: codec.ErrorSink) -> str:
    raw = doc.get("id")
    if not isinstance(raw, str) or not raw:
        errors.add("id", "network needs a string id")
        return ""
    return raw


def _annotation(doc: dict, errors: codec.ErrorSink) -> str:
    raw = doc.get("annotation", "")
    if not isinstance(raw, str):
        errors.add("annotation", "expected a string")
        return ""
    return raw


def event_to_json(event: InteractionEvent) -> str:
    """Canonical one-line JSON for a single event (used by the WAL)."""
    return codec.canonical_dumps(codec.event_to_doc(event))


def event_from_json(line: str) -> InteractionEvent:
    errors = codec.ErrorSink()
    event = codec.event_from_doc(json.loads(line), errors, "event")
    if event is None or errors.problems:
        raise DocumentError(errors.problems or ["invalid event"])
    return event
