"""Pydantic request/response models for the REST surface."""

from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from combine.knowledge import codec
from combine.knowledge.model import Anchor, CellAnchor, NodeAnchor
from combine.knowledge.table import DataTable
from combine.service.errors import ApiException


class AnchorModel(BaseModel):
    node: str
    row: int | None = None
    col: int | None = None

    def to_anchor(self) -> Anchor:
        if (self.row is None) != (self.col is None):
            raise ApiException("validation-error", "cell anchor needs both row and col", 400)
        if self.row is not None:
            return CellAnchor(node=self.node, row=self.row, col=self.col)
        return NodeAnchor(node=self.node)

    @classmethod
    def from_anchor(cls, anchor: Anchor) -> "AnchorModel":
        if isinstance(anchor, CellAnchor):
            return cls(node=anchor.node, row=anchor.row, col=anchor.col)
        return cls(node=anchor.node)


class ColumnModel(BaseModel):
    name: str
    kind: str


class TableModel(BaseModel):
    columns: list[ColumnModel] = Field(default_factory=list)
    rows: list[list[Any]] = Field(default_factory=list)

    def to_table(self) -> DataTable:
        errors = codec.ErrorSink()
        table = codec.table_from_doc(self.model_dump(), errors, "table")
        if errors.problems:
            raise ApiException(
                "validation-error", "table failed to decode", 400, {"problems": errors.problems}
            )
        return table


class CreateNetworkRequest(BaseModel):
    id: str | None = None
    annotation: str = ""


class CreateNodeRequest(BaseModel):
    kind: str
    title: str
    table: TableModel = Field(default_factory=TableModel)


class InteractRequest(BaseModel):
    anchor: AnchorModel
    action: str
    params: dict[str, str] = Field(default_factory=dict)


class EdgeRequest(BaseModel):
    source: AnchorModel
    target: AnchorModel
    annotation: str = ""
    directed: bool = True


class AnnotateRequest(BaseModel):
    target: str
    text: str


class PositionRequest(BaseModel):
    node: str
    x: float
    y: float


class MutationResponse(BaseModel):
    seq: int
    node_id: str | None = None
    edge_id: str | None = None


class ReplayCheckResponse(BaseModel):
    equal: bool
    events: int


class PyramidBuildRequest(BaseModel):
    edges: str  # edge-list text: "u v [weight]" lines
    layout: str | None = None  # "id x y" lines; when absent the server lays out
    seed: int = 0
    iterations: int = 50
    use_mst: bool = False
    palette: dict[str, tuple[int, int, int]] = Field(default_factory=dict)
    categories: dict[str, str] = Field(default_factory=dict)  # node index -> category


class PyramidBuildResponse(BaseModel):
    id: str
    checksum: str
    tile_total: int
    drawn_edges: int


class GrnaRequest(BaseModel):
    query: str  # FASTA text
    reference: str  # FASTA text, single or multi record
    pam: str = "NGG"


class LocusModel(BaseModel):
    reference: str
    position: int
    strand: str
    sequence: str
    mismatches: int


class SiteReportModel(BaseModel):
    query: str
    position: int
    strand: str
    site: str
    protospacer: str
    pam: str
    gc_percent: float
    count_1bp: int
    count_2bp: int
    loci: list[LocusModel]


class GrnaResponse(BaseModel):
    sites: list[SiteReportModel]
