import json
import random

import pytest

from combine.knowledge import (
    Column,
    DataTable,
    DocumentError,
    FORMAT_VERSION,
    KnowledgeNetwork,
    NodeAnchor,
    RemoteRef,
    load,
    save,
)
from helpers import random_action_sequence, structure_table


def test_empty_network_minimal_document():
    net = KnowledgeNetwork.create(network_id="n1")
    doc = json.loads(save(net))
    assert doc["version"] == FORMAT_VERSION
    assert doc["id"] == "n1"
    assert doc["nodes"] == {} and doc["edges"] == {} and doc["events"] == []


def test_round_trip_value_equality():
    net = KnowledgeNetwork.create(network_id="n1")
    nid = net.create_node("structure-table", "mols", structure_table(["CCO", "c1ccccc1"]))
    net.annotate(nid, "MMP pair, pIC50 d=0.7")
    net.move_node(nid, 1.5, -2.25)
    loaded = load(save(net))
    assert loaded.id == net.id
    assert loaded.nodes == net.nodes
    assert loaded.edges == net.edges
    assert loaded.positions == net.positions
    assert loaded.events == net.events


def test_save_load_save_byte_identity():
    rng = random.Random(77)
    for _ in range(25):
        net = random_action_sequence(rng, rng.randint(1, 10))
        first = save(net)
        assert save(load(first)) == first


def test_annotation_round_trips_verbatim():
    net = KnowledgeNetwork.create()
    nid = net.create_node("t", "a", DataTable())
    net.annotate(nid, "MMP pair, pIC50 Δ=0.7")
    assert load(save(net)).nodes[nid].annotation == "MMP pair, pIC50 Δ=0.7"


def test_lazy_remote_ref_saves_url_not_payload():
    net = KnowledgeNetwork.create()
    table = DataTable(
        columns=[Column("img", "remote-ref")],
        rows=[[RemoteRef("http://example.org/big.png", "image/png", "lazy")]],
    )
    net.create_node("image", "img", table)
    raw = save(net)
    assert b"http://example.org/big.png" in raw
    doc = json.loads(raw)
    assert "payload" not in raw.decode()
    loaded = load(raw)
    cell = next(iter(loaded.nodes.values())).table.rows[0][0]
    assert isinstance(cell, RemoteRef) and cell.policy == "lazy"


def test_truncated_stream_reports_byte_offset():
    net = KnowledgeNetwork.create()
    net.create_node("t", "a", DataTable())
    raw = save(net)[:40]
    with pytest.raises(DocumentError) as err:
        load(raw)
    assert "byte" in str(err.value)


def test_unsupported_version():
    doc = {"version": "combine/9", "id": "x", "annotation": "", "nodes": {}, "edges": {}, "positions": {}, "events": []}
    with pytest.raises(DocumentError, match="version"):
        load(json.dumps(doc).encode())


def test_load_reports_all_anchor_failures():
    net = KnowledgeNetwork.create(network_id="n")
    a = net.create_node("t", "a", DataTable())
    b = net.create_node("structure-table", "b", structure_table(["C"]))
    net.add_reference_edge(NodeAnchor(a), NodeAnchor(b))
    doc = json.loads(save(net))
    # corrupt two independent things: a dangling edge target and a bad position
    edge = next(iter(doc["edges"].values()))
    edge["target"] = {"node": "ghost-1"}
    doc["positions"]["ghost-2"] = [0.0, 0.0]
    with pytest.raises(DocumentError) as err:
        load(json.dumps(doc).encode())
    text = str(err.value)
    assert "ghost-1" in text and "ghost-2" in text


def test_canonical_keys_sorted():
    net = KnowledgeNetwork.create(network_id="n")
    raw = save(net).decode()
    doc = json.loads(raw)
    assert raw.index('"annotation"') < raw.index('"edges"') < raw.index('"events"')
    assert list(doc) == sorted(doc)


def test_floats_shortest_form():
    net = KnowledgeNetwork.create(network_id="n")
    nid = net.create_node("t", "a", DataTable())
    net.move_node(nid, 0.1, 2.0)
    raw = save(net).decode()
    assert "[0.1,2.0]" in raw
