"""Shared test builders for knowledge-network tests."""

import random

from combine.knowledge import (
    CellAnchor,
    ChemicalStructure,
    Column,
    DataTable,
    KnowledgeNetwork,
    NodeAnchor,
    Number,
    Text,
    default_registry,
)

SMILES_POOL = ["C", "CC", "CCO", "c1ccccc1", "CC(=O)O", "CCN", "CO", "Cc1ccccc1"]


def structure_table(smiles_list):
    return DataTable(
        columns=[Column("smiles", "chemical-structure"), Column("name", "text")],
        rows=[[ChemicalStructure(s), Text(f"mol-{i}")] for i, s in enumerate(smiles_list)],
    )


def numeric_table(columns):
    names = [f"col{i}" for i in range(len(columns))]
    n_rows = len(columns[0])
    return DataTable(
        columns=[Column(n, "number") for n in names],
        rows=[[Number(columns[ci][ri]) for ci in range(len(columns))] for ri in range(n_rows)],
    )


def random_action_sequence(rng: random.Random, length: int) -> KnowledgeNetwork:
    """Drive a network through `length` random valid operations."""
    net = KnowledgeNetwork.create(network_id=f"net-{rng.randrange(1 << 48):012x}")
    registry = default_registry()
    for step in range(length):
        choices = ["create"]
        if net.nodes:
            choices += ["annotate", "move", "edge", "interact"]
            if len(net.nodes) > 2 and rng.random() < 0.2:
                choices.append("delete")
        op = rng.choice(choices)
        node_ids = sorted(net.nodes)
        if op == "create":
            smiles = rng.sample(SMILES_POOL, rng.randint(1, 4))
            net.create_node("structure-table", f"table-{step}", structure_table(smiles))
        elif op == "annotate":
            target = rng.choice(node_ids + sorted(net.edges) + [net.id])
            net.annotate(target, f"note {step}")
        elif op == "move":
            net.move_node(rng.choice(node_ids), rng.uniform(-100, 100), rng.uniform(-100, 100))
        elif op == "edge":
            a, b = rng.choice(node_ids), rng.choice(node_ids)
            source = _random_anchor(rng, net, a)
            target = _random_anchor(rng, net, b)
            net.add_reference_edge(source, target, annotation=f"ref {step}", directed=rng.random() < 0.5)
        elif op == "interact":
            nid = rng.choice(node_ids)
            node = net.nodes[nid]
            if node.kind == "structure-table" and node.table.rows:
                action = rng.choice(["cluster", "calc-properties", "chord"])
                net.interact(NodeAnchor(nid), action, {"linkage": "single"}, registry)
            else:
                net.annotate(nid, f"fallback {step}")
        elif op == "delete":
            net.delete_node(rng.choice(node_ids))
    return net


def _random_anchor(rng, net, node_id):
    node = net.nodes[node_id]
    rows, cols = node.table.shape
    if rows and cols and rng.random() < 0.5:
        return CellAnchor(node_id, rng.randrange(rows), rng.randrange(cols))
    return NodeAnchor(node_id)
