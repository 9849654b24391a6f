"""Event-log replay: rebuild a network deterministically from its history.

Replay never fetches anything; every remote result was recorded into event
params when the interaction first ran. Applying the full log of a network
(same id and annotation seed) reproduces a byte-identical canonical document.
"""

from __future__ import annotations

import json

from combine.knowledge.model import InteractionEvent
from combine.knowledge.network import KnowledgeNetwork, replay_params_table


class ReplayError(ValueError):
    pass


def replay(
    events: list[InteractionEvent],
    registry,
    network_id: str,
    annotation: str = "",
) -> KnowledgeNetwork:
    """Fold the event log over an empty network."""
    net = KnowledgeNetwork(id=network_id, annotation=annotation)
    for event in events:
        apply_event(net, event, registry)
    return net


def apply_event(net: KnowledgeNetwork, event: InteractionEvent, registry) -> None:
    """Apply one recorded event; seq must be the next in line."""
    expected = len(net.events) + 1
    if event.seq != expected:
        kind = "duplicate" if event.seq < expected else "gap"
        raise ReplayError(f"sequence {kind}: got seq {event.seq}, expected {expected}")

    action = event.action
    params = event.params
    if action == "create_node":
        net.create_node(
            kind=params["kind"],
            title=params["title"],
            table=replay_params_table(params),
            node_id=event.produced_nodes[0],
            timestamp=event.timestamp,
        )
    elif action == "add_edge":
        from combine.knowledge import codec

        errors = codec.ErrorSink()
        target = codec.anchor_from_doc(json.loads(params["target"]), errors, "params.target")
        if target is None or errors.problems:
            raise ReplayError(f"event {event.seq}: bad target anchor: {errors.problems}")
        net.add_reference_edge(
            source=event.source,
            target=target,
            annotation=params.get("annotation", ""),
            directed=params.get("directed", "true") == "true",
            edge_id=event.produced_edges[0],
            timestamp=event.timestamp,
        )
    elif action == "annotate":
        net.annotate(params["target"], params["text"], timestamp=event.timestamp)
    elif action == "delete_node":
        net.delete_node(params["node"], timestamp=event.timestamp)
    elif action == "move_node":
        net.move_node(
            params["node"], float(params["x"]), float(params["y"]), timestamp=event.timestamp
        )
    elif action == "resolve_lazy":
        net._append_event("resolve_lazy", None, dict(params), [], [], event.timestamp)
        net.apply_resolved(json.loads(params["resolved"]))
    else:
        if registry is None or registry.get(action) is None:
            raise ReplayError(f"event {event.seq}: unknown action {action!r}")
        net.interact(
            source=event.source,
            action=action,
            params=params,
            registry=registry,
            node_id=event.produced_nodes[0],
            edge_id=event.produced_edges[0],
            timestamp=event.timestamp,
        )

    replayed = net.events[-1]
    if (replayed.produced_nodes, replayed.produced_edges) != (
        event.produced_nodes,
        event.produced_edges,
    ):
        raise ReplayError(f"event {event.seq}: produced ids diverged during replay")
