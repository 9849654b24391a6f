"""The REST service binding every module: networks, tiles, datasources, gRNA."""

from __future__ import annotations

import json

from fastapi import FastAPI, Query, Response
from fastapi.middleware.cors import CORSMiddleware

from combine.datasources import (
    ChemblClient,
    FixtureMissingError,
    NotFoundError,
    PayloadError,
    PdbClient,
    StatusError,
    TransportError,
    UnichemClient,
    UniprotClient,
    active_targets,
)
from combine.grna import SequenceError, find_sites, off_targets, parse_fasta
from combine.knowledge import canonical, codec, default_registry, replay
from combine.knowledge.network import (
    ActionError,
    AnchorError,
    NetworkError,
    UnknownActionError,
)
from combine.knowledge.table import TableError
from combine.knowledge.values import ChemicalStructure, Identifier, Text
from combine.service.config import ServerConfig
from combine.service.errors import ApiException, install_handlers
from combine.service.models import (
    AnnotateRequest,
    CreateNetworkRequest,
    CreateNodeRequest,
    EdgeRequest,
    GrnaRequest,
    GrnaResponse,
    InteractRequest,
    LocusModel,
    MutationResponse,
    PositionRequest,
    PyramidBuildRequest,
    PyramidBuildResponse,
    ReplayCheckResponse,
    SiteReportModel,
)
from combine.service.store import NetworkNotFound, NetworkStore, PyramidStore, StoreError
from combine.tiles import MAX_ZOOM, TileCoord
from combine.analysis import SmilesError


def create_app(config: ServerConfig) -> FastAPI:
    app = FastAPI(title="combine-workbench", version="0.1.0")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    install_handlers(app)

    registry = default_registry()
    config.data_dir.mkdir(parents=True, exist_ok=True)
    networks = NetworkStore(config.data_dir, registry)
    pyramids = PyramidStore(config.data_dir, config.tile_cache_size)
    transport = config.datasource_config().build_transport()
    chembl = ChemblClient(transport, config.chembl_base)
    unichem = UnichemClient(transport, config.unichem_base)
    uniprot = UniprotClient(transport, config.uniprot_base)
    pdb = PdbClient(transport, config.pdb_base)

    app.state.config = config
    app.state.networks = networks
    app.state.pyramids = pyramids
    app.state.registry = registry

    def canonical_response(net, status: int = 200) -> Response:
        return Response(content=canonical.save(net), media_type="application/json", status_code=status)

    def get_network(network_id: str):
        try:
            return networks.get(network_id)
        except NetworkNotFound:
            raise ApiException("network-not-found", f"no network {network_id!r}", 404)

    def run_mutation(network_id: str, fn):
        try:
            return networks.mutate(network_id, fn)
        except NetworkNotFound:
            raise ApiException("network-not-found", f"no network {network_id!r}", 404)
        except UnknownActionError as exc:
            raise ApiException("unknown-action", str(exc), 400)
        except AnchorError as exc:
            raise ApiException("invalid-anchor", str(exc), 400)
        except TableError as exc:
            raise ApiException("invalid-table", str(exc), 400, {"problems": exc.problems})
        except ActionError as exc:
            raise ApiException("action-failed", str(exc), 400)
        except NetworkError as exc:
            raise ApiException("invalid-request", str(exc), 400)

    # -- networks ---------------------------------------------------------

    @app.post("/networks", status_code=201)
    def create_network(body: CreateNetworkRequest):
        try:
            net = networks.create(network_id=body.id, annotation=body.annotation)
        except StoreError as exc:
            raise ApiException("network-exists", str(exc), 409)
        return canonical_response(net, status=201)

    @app.get("/networks")
    def list_networks(limit: int = Query(100, ge=1), offset: int = Query(0, ge=0)):
        ids = networks.list_ids()
        return {"networks": ids[offset : offset + limit], "total": len(ids)}

    @app.get("/networks/{network_id}")
    def fetch_network(network_id: str):
        return canonical_response(get_network(network_id))

    @app.delete("/networks/{network_id}", status_code=204)
    def delete_network(network_id: str):
        try:
            networks.delete(network_id)
        except NetworkNotFound:
            raise ApiException("network-not-found", f"no network {network_id!r}", 404)

    @app.post("/networks/{network_id}/nodes")
    def create_node(network_id: str, body: CreateNodeRequest):
        def fn(net):
            return net.create_node(body.kind, body.title, body.table.to_table())

        node_id, net = run_mutation(network_id, fn)
        return MutationResponse(seq=len(net.events), node_id=node_id)

    @app.post("/networks/{network_id}/interact")
    def interact(network_id: str, body: InteractRequest):
        anchor = body.anchor.to_anchor()
        params = dict(body.params)
        _prefetch(network_id, anchor, body.action, params)

        def fn(net):
            return net.interact(anchor, body.action, params, registry)

        (node_id, edge_id), net = run_mutation(network_id, fn)
        return MutationResponse(seq=len(net.events), node_id=node_id, edge_id=edge_id)

    @app.post("/networks/{network_id}/edges")
    def add_edge(network_id: str, body: EdgeRequest):
        def fn(net):
            return net.add_reference_edge(
                body.source.to_anchor(), body.target.to_anchor(), body.annotation, body.directed
            )

        edge_id, net = run_mutation(network_id, fn)
        return MutationResponse(seq=len(net.events), edge_id=edge_id)

    @app.post("/networks/{network_id}/annotate")
    def annotate(network_id: str, body: AnnotateRequest):
        _, net = run_mutation(network_id, lambda net: net.annotate(body.target, body.text))
        return MutationResponse(seq=len(net.events))

    @app.post("/networks/{network_id}/positions")
    def move_node(network_id: str, body: PositionRequest):
        _, net = run_mutation(network_id, lambda net: net.move_node(body.node, body.x, body.y))
        return MutationResponse(seq=len(net.events))

    @app.get("/networks/{network_id}/events")
    def events(network_id: str, limit: int = Query(100, ge=1), offset: int = Query(0, ge=0)):
        net = get_network(network_id)
        window = net.events[offset : offset + limit]
        return {
            "events": [codec.event_to_doc(e) for e in window],
            "total": len(net.events),
            "offset": offset,
        }

    @app.post("/networks/{network_id}/replay-check")
    def replay_check(network_id: str):
        net = get_network(network_id)
        rebuilt = replay(net.events, registry, network_id=net.id, annotation=net.annotation)
        equal = canonical.save(rebuilt) == canonical.save(net)
        return ReplayCheckResponse(equal=equal, events=len(net.events))

    # -- pyramids ---------------------------------------------------------

    @app.post("/pyramids", status_code=201)
    def build_pyramid_endpoint(body: PyramidBuildRequest):
        try:
            manifest = pyramids.build(
                edges_text=body.edges,
                layout_text=body.layout,
                seed=body.seed,
                iterations=body.iterations,
                use_mst=body.use_mst,
                palette=body.palette,
                categories=body.categories,
            )
        except ValueError as exc:
            raise ApiException("invalid-graph", str(exc), 400)
        return PyramidBuildResponse(
            id=manifest.pyramid_id,
            checksum=manifest.checksum,
            tile_total=sum(4**z for z in range(MAX_ZOOM + 1)),
            drawn_edges=manifest.drawn_edge_count,
        )

    @app.get("/pyramids")
    def list_pyramids(limit: int = Query(100, ge=1), offset: int = Query(0, ge=0)):
        ids = pyramids.list_ids()
        return {"pyramids": ids[offset : offset + limit], "total": len(ids)}

    @app.get("/pyramids/{pyramid_id}/manifest")
    def pyramid_manifest(pyramid_id: str):
        try:
            return pyramids.manifest(pyramid_id).to_doc()
        except NetworkNotFound:
            raise ApiException("pyramid-not-found", f"no pyramid {pyramid_id!r}", 404)

    @app.get("/pyramids/{pyramid_id}/tiles/{z}/{x}/{y}.png")
    def tile(pyramid_id: str, z: int, x: int, y: int):
        try:
            coord = TileCoord(z, x, y).validate()
        except ValueError as exc:
            raise ApiException("tile-out-of-range", str(exc), 404)
        try:
            pyramids.manifest(pyramid_id)
        except NetworkNotFound:
            raise ApiException("pyramid-not-found", f"no pyramid {pyramid_id!r}", 404)
        try:
            data = pyramids.tile_bytes(pyramid_id, coord)
        except FileNotFoundError:
            raise ApiException("tile-not-found", f"tile {coord} missing", 404)
        return Response(content=data, media_type="image/png")

    # -- datasources ------------------------------------------------------

    def upstream(fn):
        try:
            return fn()
        except ValueError as exc:
            raise ApiException("bad-request", str(exc), 400)
        except SmilesError as exc:
            raise ApiException("bad-request", str(exc), 400)
        except NotFoundError as exc:
            raise ApiException("not-found", str(exc), 404)
        except FixtureMissingError as exc:
            raise ApiException("fixture-missing", str(exc), 502)
        except (TransportError, StatusError, PayloadError) as exc:
            raise ApiException("upstream-error", str(exc), 502)

    @app.get("/datasource/chembl/similarity")
    def chembl_similarity(smiles: str, cutoff: float = 90):
        records = upstream(lambda: chembl.similarity_search(smiles, cutoff))
        return {"compounds": [vars(r) for r in records]}

    @app.get("/datasource/chembl/substructure")
    def chembl_substructure(smiles: str):
        records = upstream(lambda: chembl.substructure_search(smiles))
        return {"compounds": [vars(r) for r in records]}

    @app.get("/datasource/chembl/activities")
    def chembl_activities(id: str, pchembl_min: float = 6.0):
        records = upstream(lambda: chembl.fetch_activities(id, pchembl_min))
        return {
            "activities": [vars(r) for r in records],
            "targets": sorted(active_targets(records)),
        }

    @app.get("/datasource/unichem/{inchikey}")
    def unichem_xrefs(inchikey: str):
        records = upstream(lambda: unichem.xrefs(inchikey))
        return {"xrefs": [vars(r) for r in records]}

    @app.get("/datasource/uniprot/{accession}")
    def uniprot_fetch(accession: str):
        record = upstream(lambda: uniprot.fetch(accession))
        return vars(record)

    @app.get("/datasource/pdb/{pdb_id}")
    def pdb_fetch(pdb_id: str):
        record = upstream(lambda: pdb.fetch(pdb_id))
        return {
            "pdb_id": record.pdb_id,
            "title": record.title,
            "image": codec.cell_to_doc(record.image),
        }

    # -- gRNA ---------------------------------------------------------------

    @app.post("/grna")
    def grna(body: GrnaRequest):
        try:
            queries = parse_fasta(body.query, default_name="query")
            references = parse_fasta(body.reference, default_name="reference")
            reports = []
            for query in queries:
                for site in find_sites(query, pam=body.pam):
                    report = off_targets(site, references, pam=body.pam)
                    reports.append(
                        SiteReportModel(
                            query=query.name,
                            position=site.position,
                            strand=site.strand,
                            site=site.site,
                            protospacer=site.protospacer,
                            pam=site.pam,
                            gc_percent=site.gc_percent,
                            count_1bp=report.count_1bp,
                            count_2bp=report.count_2bp,
                            loci=[LocusModel(**vars(l)) for l in report.loci],
                        )
                    )
        except (SequenceError, ValueError) as exc:
            raise ApiException("invalid-sequence", str(exc), 400)
        return GrnaResponse(sites=reports)

    # -- interact prefetch: record remote results into params ----------------

    def _prefetch(network_id: str, anchor, action: str, params: dict[str, str]) -> None:
        """Fill params with fetched payloads so handlers stay pure and replayable."""
        needs = {
            "open-pdb-image": "url",
            "open-sequence": "sequence",
            "similarity-search": "results",
            "activities": "results",
        }
        key = needs.get(action)
        if key is None or key in params:
            return
        net = get_network(network_id)
        try:
            cell = net.anchored_data(anchor)
        except AnchorError as exc:
            raise ApiException("invalid-anchor", str(exc), 400)

        def cell_value() -> str:
            if isinstance(cell, Identifier):
                return cell.value
            if isinstance(cell, (Text,)):
                return cell.value
            if isinstance(cell, ChemicalStructure):
                return cell.smiles
            raise ApiException(
                "invalid-anchor", f"action {action!r} needs an identifier or structure cell", 400
            )

        if action == "open-pdb-image":
            record = upstream(lambda: pdb.fetch(cell_value()))
            params["url"] = record.image.url
            params["media_type"] = record.image.media_type
            params.setdefault("title", record.title or record.pdb_id)
        elif action == "open-sequence":
            record = upstream(lambda: uniprot.fetch(cell_value()))
            params["sequence"] = record.sequence
            params["protein"] = record.protein_name
            params["organism"] = record.organism
        elif action == "similarity-search":
            cutoff = float(params.get("cutoff", "90"))
            records = upstream(lambda: chembl.similarity_search(cell_value(), cutoff))
            params["results"] = json.dumps(
                [
                    {
                        "chembl_id": r.chembl_id,
                        "smiles": r.smiles,
                        "inchikey": r.inchikey,
                        "name": r.name,
                        "score": r.score,
                    }
                    for r in records
                ]
            )
        elif action == "activities":
            pchembl_min = float(params.get("pchembl_min", "6"))
            records = upstream(lambda: chembl.fetch_activities(cell_value(), pchembl_min))
            params["results"] = json.dumps(
                [
                    {
                        "assay": r.assay_id,
                        "target": r.target_id,
                        "type": r.activity_type,
                        "value": r.value,
                        "unit": r.unit,
                        "pchembl": r.pchembl,
                    }
                    for r in records
                ]
            )

    return app
