"""Knowledge-network document model: app nodes, anchored edges, event log."""

from combine.knowledge.canonical import (
    FORMAT_VERSION,
    DocumentError,
    canonical_bytes,
    load,
    save,
)
from combine.knowledge.network import (
    Anchor,
    AppNode,
    CellAnchor,
    Edge,
    InteractionEvent,
    KnowledgeNetwork,
    NodeAnchor,
)
from combine.knowledge.actions import ActionRegistry, default_registry
from combine.knowledge.replay import ReplayError, replay
from combine.knowledge.table import Column, DataTable
from combine.knowledge.validate import Issue, validate_network
from combine.knowledge.values import (
    BioSequence,
    BlobRef,
    CellValue,
    ChemicalStructure,
    Identifier,
    Number,
    RemoteRef,
    Text,
)

__all__ = [
    "ActionRegistry",
    "Anchor",
    "AppNode",
    "BioSequence",
    "BlobRef",
    "CellAnchor",
    "CellValue",
    "ChemicalStructure",
    "Column",
    "DataTable",
    "DocumentError",
    "Edge",
    "FORMAT_VERSION",
    "Identifier",
    "InteractionEvent",
    "Issue",
    "KnowledgeNetwork",
    "NodeAnchor",
    "Number",
    "RemoteRef",
    "ReplayError",
    "Text",
    "canonical_bytes",
    "default_registry",
    "load",
    "replay",
    "save",
    "validate_network",
]
