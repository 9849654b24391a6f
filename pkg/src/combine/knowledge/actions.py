"""Interaction actions: pure handlers mapping anchored data to child nodes.

A handler takes (source node kind, anchored data, params) and returns
(child kind, child table). Handlers must be deterministic given their
inputs; anything fetched remotely is recorded into params by the caller
before the interaction, never fetched inside a handler.
"""

from __future__ import annotations

import json
from typing import Callable, Union

from combine.analysis import (
    calc_properties,
    chord_pairs,
    fingerprint,
    hcluster,
    heatmap_normalize,
    parse_smiles,
    similarity_matrix,
    tanimoto,
)
from combine.grna import find_sites
from combine.knowledge.network import RESERVED_ACTIONS
from combine.knowledge.table import Column, DataTable
from combine.knowledge.values import (
    KIND_IDENTIFIER,
    KIND_NUMBER,
    KIND_SEQUENCE,
    KIND_STRUCTURE,
    KIND_TEXT,
    BioSequence,
    CellValue,
    ChemicalStructure,
    Identifier,
    Number,
    RemoteRef,
    Text,
)

AnchoredData = Union[DataTable, CellValue]
Handler = Callable[[str, AnchoredData, dict[str, str]], tuple[str, DataTable]]

DEFAULT_PDB_IMAGE_BASE = "https://cdn.rcsb.org/images/structures"


class ActionRegistry:
    def __init__(self):
        self._handlers: dict[str, Handler] = {}

    def register(self, name: str, handler: Handler) -> None:
        if name in RESERVED_ACTIONS:
            raise ValueError(f"action name {name!r} is reserved")
        if name in self._handlers:
            raise ValueError(f"action {name!r} already registered")
        self._handlers[name] = handler

    def get(self, name: str) -> Handler | None:
        return self._handlers.get(name)

    def names(self) -> list[str]:
        return sorted(self._handlers)


def _structure_column(table: DataTable, params: dict[str, str]) -> int:
    if "column" in params:
        return table.column_index(params["column"])
    candidates = table.columns_of_kind(KIND_STRUCTURE)
    if not candidates:
        raise ValueError("no chemical-structure column in source table")
    return candidates[0]


def _structures(table: DataTable, params: dict[str, str]) -> list[tuple[int, str]]:
    ci = _structure_column(table, params)
    out = []
    for ri, row in enumerate(table.rows):
        cell = row[ci]
        if isinstance(cell, ChemicalStructure):
            out.append((ri, cell.smiles))
    if not out:
        raise ValueError("structure column holds no structures")
    return out


def cluster_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    if not isinstance(data, DataTable):
        raise ValueError("cluster runs on a node anchor holding a table")
    structures = _structures(data, params)
    fps = [fingerprint(parse_smiles(smiles)) for _, smiles in structures]
    dend = hcluster(similarity_matrix(fps), params.get("linkage", "average"))
    table = DataTable(
        columns=[
            Column("cluster_a", KIND_NUMBER),
            Column("cluster_b", KIND_NUMBER),
            Column("height", KIND_NUMBER),
            Column("merged", KIND_NUMBER),
        ],
        rows=[
            [Number(m.a), Number(m.b), Number(m.height), Number(m.cluster)]
            for m in dend.merges
        ],
    )
    return "dendrogram", table


def properties_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    if not isinstance(data, DataTable):
        raise ValueError("calc-properties runs on a node anchor holding a table")
    structures = _structures(data, params)
    rows = []
    for _, smiles in structures:
        rec = calc_properties(parse_smiles(smiles))
        rows.append(
            [
                ChemicalStructure(smiles),
                Number(rec.molecular_weight),
                Number(rec.heavy_atom_count),
                Number(rec.ring_bond_count),
                Number(rec.hbond_acceptors),
                Number(rec.hbond_donors),
            ]
        )
    table = DataTable(
        columns=[
            Column("structure", KIND_STRUCTURE),
            Column("mw", KIND_NUMBER),
            Column("heavy_atoms", KIND_NUMBER),
            Column("ring_bonds", KIND_NUMBER),
            Column("acceptors", KIND_NUMBER),
            Column("donors", KIND_NUMBER),
        ],
        rows=rows,
    )
    return "property-table", table


def heatmap_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    if not isinstance(data, DataTable):
        raise ValueError("heatmap runs on a node anchor holding a table")
    numeric = data.columns_of_kind(KIND_NUMBER)
    if not numeric:
        raise ValueError("no numeric columns to normalize")
    columns = []
    for ci in numeric:
        columns.append(
            [cell.value if isinstance(cell, Number) else None for cell in (row[ci] for row in data.rows)]
        )
    hm = heatmap_normalize(columns)
    out_rows = []
    for ri in range(len(data.rows)):
        out_rows.append(
            [None if hm.values[k][ri] is None else Number(hm.values[k][ri]) for k in range(len(numeric))]
        )
    table = DataTable(
        columns=[Column(data.columns[ci].name, KIND_NUMBER) for ci in numeric],
        rows=out_rows,
    )
    return "heatmap", table


def chord_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    if not isinstance(data, DataTable):
        raise ValueError("chord runs on a node anchor holding a table")
    threshold = float(params.get("threshold", "0.8"))
    structures = _structures(data, params)
    fps = [fingerprint(parse_smiles(smiles)) for _, smiles in structures]
    pairs = chord_pairs(fps, threshold)
    rows = [
        [Number(structures[i][0]), Number(structures[j][0]), Number(tanimoto(fps[i], fps[j]))]
        for i, j in pairs
    ]
    table = DataTable(
        columns=[Column("row_a", KIND_NUMBER), Column("row_b", KIND_NUMBER), Column("similarity", KIND_NUMBER)],
        rows=rows,
    )
    return "chord", table


def open_pdb_image_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    pdb_id = _identifier_value(data, params, key="id")
    url = params.get("url") or f"{DEFAULT_PDB_IMAGE_BASE}/{pdb_id.lower()}_assembly-1.jpeg"
    media = params.get("media_type", "image/jpeg")
    table = DataTable(
        columns=[Column("image", "remote-ref")],
        rows=[[RemoteRef(url=url, media_type=media, policy="lazy")]],
    )
    return "image", table


def open_sequence_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    accession = _identifier_value(data, params, key="accession")
    sequence = params.get("sequence")
    if not sequence:
        raise ValueError("params must record the fetched protein sequence")
    table = DataTable(
        columns=[
            Column("accession", KIND_IDENTIFIER),
            Column("protein", KIND_TEXT),
            Column("organism", KIND_TEXT),
            Column("sequence", KIND_SEQUENCE),
        ],
        rows=[
            [
                Identifier("uniprot", accession),
                Text(params.get("protein", "")),
                Text(params.get("organism", "")),
                BioSequence("protein", sequence),
            ]
        ],
    )
    return "sequence-viewer", table


def similarity_search_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    records = _recorded_results(params)
    rows = []
    for rec in records:
        rows.append(
            [
                Identifier("chembl", rec["chembl_id"]),
                ChemicalStructure(rec["smiles"]),
                Text(rec.get("inchikey", "")),
                Text(rec.get("name") or ""),
                None if rec.get("score") is None else Number(float(rec["score"])),
            ]
        )
    table = DataTable(
        columns=[
            Column("chembl", KIND_IDENTIFIER),
            Column("structure", KIND_STRUCTURE),
            Column("inchikey", KIND_TEXT),
            Column("name", KIND_TEXT),
            Column("score", KIND_NUMBER),
        ],
        rows=rows,
    )
    return "structure-table", table


def activities_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    records = _recorded_results(params)
    rows = []
    for rec in records:
        rows.append(
            [
                Identifier("chembl-assay", rec["assay"]),
                Identifier("chembl-target", rec["target"]),
                Text(rec.get("type", "")),
                None if rec.get("value") is None else Number(float(rec["value"])),
                Text(rec.get("unit") or ""),
                None if rec.get("pchembl") is None else Number(float(rec["pchembl"])),
            ]
        )
    table = DataTable(
        columns=[
            Column("assay", KIND_IDENTIFIER),
            Column("target", KIND_IDENTIFIER),
            Column("type", KIND_TEXT),
            Column("value", KIND_NUMBER),
            Column("unit", KIND_TEXT),
            Column("pchembl", KIND_NUMBER),
        ],
        rows=rows,
    )
    return "activity-table", table


def grna_sites_action(source_kind: str, data: AnchoredData, params: dict[str, str]):
    if not isinstance(data, BioSequence) or data.alphabet != "DNA":
        raise ValueError("grna-find-sites runs on a DNA bio-sequence cell")
    sites = find_sites(data.sequence, pam=params.get("pam", "NGG"))
    rows = []
    for s in sites:
        rows.append(
            [
                Number(s.position),
                Text(s.strand),
                BioSequence("DNA", s.site),
                BioSequence("DNA", s.protospacer),
                Text(s.pam),
                Number(s.gc_percent),
            ]
        )
    table = DataTable(
        columns=[
            Column("position", KIND_NUMBER),
            Column("strand", KIND_TEXT),
            Column("site", KIND_SEQUENCE),
            Column("protospacer", KIND_SEQUENCE),
            Column("pam", KIND_TEXT),
            Column("gc_percent", KIND_NUMBER),
        ],
        rows=rows,
    )
    return "grna-tool", table


def _identifier_value(data: AnchoredData, params: dict[str, str], key: str) -> str:
    if isinstance(data, Identifier):
        return data.value
    if isinstance(data, Text):
        return data.value
    if key in params:
        return params[key]
    raise ValueError(f"need an identifier cell or params[{key!r}]")


def _recorded_results(params: dict[str, str]) -> list[dict]:
    raw = params.get("results")
    if raw is None:
        raise ValueError("params must record fetched results under 'results'")
    records = json.loads(raw)
    if not isinstance(records, list):
        raise ValueError("'results' must be a JSON array")
    return records


def default_registry() -> ActionRegistry:
    registry = ActionRegistry()
    registry.register("cluster", cluster_action)
    registry.register("calc-properties", properties_action)
    registry.register("heatmap", heatmap_action)
    registry.register("chord", chord_action)
    registry.register("open-pdb-image", open_pdb_image_action)
    registry.register("open-sequence", open_sequence_action)
    registry.register("similarity-search", similarity_search_action)
    registry.register("activities", activities_action)
    registry.register("grna-find-sites", grna_sites_action)
    return registry
