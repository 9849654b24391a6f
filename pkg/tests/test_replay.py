import random

import pytest

from combine.knowledge import (
    DataTable,
    InteractionEvent,
    KnowledgeNetwork,
    ReplayError,
    default_registry,
    replay,
    save,
)
from helpers import random_action_sequence


@pytest.fixture(scope="module")
def registry():
    return default_registry()


def test_empty_log_empty_network(registry):
    net = replay([], registry, network_id="fresh")
    assert net.nodes == {} and net.edges == {} and net.events == []


def test_replay_basic_sequence_byte_identical(registry):
    net = KnowledgeNetwork.create(network_id="n1")
    nid = net.create_node("t", "a", DataTable())
    net.annotate(nid, "hello")
    net.move_node(nid, 3.0, 4.0)
    rebuilt = replay(net.events, registry, network_id="n1")
    assert save(rebuilt) == save(net)


def test_replay_sequence_gap(registry):
    net = KnowledgeNetwork.create(network_id="n1")
    net.create_node("t", "a", DataTable())
    net.create_node("t", "b", DataTable())
    net.create_node("t", "c", DataTable())
    broken = [net.events[0], net.events[2]]
    with pytest.raises(ReplayError, match="gap"):
        replay(broken, registry, network_id="n1")


def test_replay_duplicate_seq(registry):
    net = KnowledgeNetwork.create(network_id="n1")
    net.create_node("t", "a", DataTable())
    duplicated = [net.events[0], net.events[0]]
    with pytest.raises(ReplayError, match="duplicate"):
        replay(duplicated, registry, network_id="n1")


def test_replay_unknown_action(registry):
    event = InteractionEvent(
        seq=1, timestamp=0, action="mystery", source=None, params={}, produced_nodes=["x"], produced_edges=["y"]
    )
    with pytest.raises(ReplayError, match="unknown action"):
        replay([event], registry, network_id="n")


def test_replay_random_sequences_byte_identical(registry):
    rng = random.Random(2024)
    for _ in range(100):
        net = random_action_sequence(rng, rng.randint(1, 12))
        rebuilt = replay(net.events, registry, network_id=net.id, annotation=net.annotation)
        assert save(rebuilt) == save(net)


def test_replay_preserves_timestamps(registry):
    net = KnowledgeNetwork.create(network_id="n1")
    net.create_node("t", "a", DataTable(), timestamp=1234567890)
    rebuilt = replay(net.events, registry, network_id="n1")
    assert rebuilt.events[0].timestamp == 1234567890
