"""Immutable building blocks of a knowledge network."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from combine.knowledge.table import DataTable

EDGE_SPAWN = "spawn"
EDGE_REFERENCE = "reference"


@dataclass(frozen=True)
class NodeAnchor:
    node: str


@dataclass(frozen=True)
class CellAnchor:
    node: str
    row: int
    col: int


Anchor = Union[NodeAnchor, CellAnchor]


@dataclass
class AppNode:
    id: str
    kind: str
    title: str
    table: DataTable
    annotation: str = ""
    metadata: dict[str, str] = field(default_factory=dict)
    created_seq: int = 0


@dataclass
class Edge:
    id: str
    source: Anchor
    target: Anchor
    kind: str  # spawn | reference
    directed: bool
    annotation: str = ""


@dataclass
class InteractionEvent:
    seq: int
    timestamp: int  # UTC unix seconds
    action: str
    source: Anchor | None
    params: dict[str, str]
    produced_nodes: list[str] = field(default_factory=list)
    produced_edges: list[str] = field(default_factory=list)
