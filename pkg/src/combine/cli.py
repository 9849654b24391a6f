"""Command-line client: serve the API, manage documents, build pyramids, run gRNA.

Exit codes: 0 success, 1 validation failure, 2 I/O or transport failure
(click also exits 2 on usage errors).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from combine.knowledge import DocumentError, canonical
from combine.knowledge.canonical import load_with_issues


def _fail_io(message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(2)


def _fail_validation(message: str):
    click.echo(f"invalid: {message}", err=True)
    sys.exit(1)


@click.group()
def main():
    """COMBINE workbench command-line interface."""


@main.command()
@click.option("--host", default=None, help="listen address")
@click.option("--port", default=None, type=int, help="listen port")
@click.option("--data-dir", default=None, type=click.Path(path_type=Path))
@click.option("--offline/--online", default=None, help="serve datasources from fixtures only")
@click.option("--fixtures-dir", default=None, type=click.Path(path_type=Path))
@click.option("--lod-threshold", default=None, type=float)
def serve(host, port, data_dir, offline, fixtures_dir, lod_threshold):
    """Run the REST service."""
    import uvicorn

    from combine.service import ConfigError, ServerConfig, create_app

    try:
        config = ServerConfig.from_env(
            host=host,
            port=port,
            data_dir=data_dir,
            offline=offline,
            fixtures_dir=fixtures_dir,
            lod_threshold=lod_threshold,
        )
    except ConfigError as exc:
        _fail_validation(str(exc))
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port)


@main.group()
def net():
    """Knowledge-network documents."""


@net.command("export")
@click.argument("network_id")
@click.option("--data-dir", required=True, type=click.Path(path_type=Path))
@click.option("--out", "-o", type=click.Path(path_type=Path), help="default: stdout")
def net_export(network_id, data_dir, out):
    """Write a stored network as a canonical document."""
    from combine.knowledge import default_registry
    from combine.service.store import NetworkNotFound, NetworkStore

    try:
        store = NetworkStore(data_dir, default_registry())
        data = canonical.save(store.get(network_id))
    except NetworkNotFound:
        _fail_io(f"no network {network_id!r} in {data_dir}")
    except OSError as exc:
        _fail_io(str(exc))
    if out:
        out.write_bytes(data)
        click.echo(f"wrote {out}")
    else:
        sys.stdout.buffer.write(data)


@net.command("import")
@click.argument("document", type=click.Path(path_type=Path))
@click.option("--data-dir", required=True, type=click.Path(path_type=Path))
@click.option("--overwrite", is_flag=True)
def net_import(document, data_dir, overwrite):
    """Validate a document and store it."""
    from combine.knowledge import default_registry
    from combine.service.store import NetworkStore, StoreError

    try:
        raw = document.read_bytes()
    except OSError as exc:
        _fail_io(str(exc))
    try:
        network = canonical.load(raw)
    except DocumentError as exc:
        _fail_validation("\n".join(exc.issues))
    try:
        NetworkStore(data_dir, default_registry()).import_network(network, overwrite=overwrite)
    except StoreError as exc:
        _fail_validation(str(exc))
    except OSError as exc:
        _fail_io(str(exc))
    click.echo(f"imported {network.id} ({len(network.nodes)} nodes, {len(network.events)} events)")


@net.command("validate")
@click.argument("document", type=click.Path(path_type=Path))
def net_validate(document):
    """Report every validation issue in a document."""
    try:
        raw = document.read_bytes()
    except OSError as exc:
        _fail_io(str(exc))
    try:
        _, issues = load_with_issues(raw)
    except DocumentError as exc:
        for issue in exc.issues:
            click.echo(f"[error] {issue}")
        sys.exit(1)
    for issue in issues:
        click.echo(str(issue))
    if any(i.severity == "error" for i in issues):
        sys.exit(1)
    click.echo("ok" if not issues else f"ok with {len(issues)} warning(s)")


@main.group()
def pyramid():
    """Tile pyramids."""


@pyramid.command("build")
@click.option("--edges", required=True, type=click.Path(path_type=Path), help="edge list: u v [weight]")
@click.option("--layout", type=click.Path(path_type=Path), help="layout file: id x y")
@click.option("--mst", "use_mst", is_flag=True, help="draw only the minimum spanning forest")
@click.option("--out", required=True, type=click.Path(path_type=Path))
@click.option("--seed", default=0, type=int)
@click.option("--iterations", default=50, type=int)
def pyramid_build(edges, layout, use_mst, out, seed, iterations):
    """Rasterize a graph into a 7-level tile pyramid."""
    from combine.analysis.graph import parse_edge_list
    from combine.tiles import build_pyramid, force_layout, import_layout, write_pyramid

    try:
        edge_text = edges.read_text()
        layout_text = layout.read_text() if layout else None
    except OSError as exc:
        _fail_io(str(exc))
    try:
        graph = parse_edge_list(edge_text)
        positions = import_layout(layout_text) if layout_text else force_layout(graph, seed, iterations)
        result = build_pyramid(graph, positions, use_mst=use_mst)
    except ValueError as exc:
        _fail_validation(str(exc))
    try:
        write_pyramid(result, out)
    except OSError as exc:
        _fail_io(str(exc))
    counts = ", ".join(str(result.tile_count(z)) for z in range(7))
    click.echo(f"pyramid {result.manifest.pyramid_id}: tiles per level {counts}")
    click.echo(f"total {len(result.tiles)} tiles, checksum {result.manifest.checksum}")


@main.command()
@click.option("--query", required=True, type=click.Path(path_type=Path), help="query FASTA")
@click.option("--reference", required=True, type=click.Path(path_type=Path), help="reference FASTA")
@click.option("--pam", default="NGG", show_default=True)
@click.option("--json", "as_json", is_flag=True, help="emit JSON instead of a table")
def grna(query, reference, pam, as_json):
    """Enumerate guide sites and count 1/2-mismatch off-targets."""
    from combine.grna import SequenceError, find_sites, off_targets, parse_fasta

    try:
        query_text = query.read_text()
        reference_text = reference.read_text()
    except OSError as exc:
        _fail_io(str(exc))
    try:
        queries = parse_fasta(query_text, default_name="query")
        references = parse_fasta(reference_text, default_name="reference")
        rows = []
        for record in queries:
            for site in find_sites(record, pam=pam):
                report = off_targets(site, references, pam=pam)
                rows.append(
                    {
                        "query": record.name,
                        "position": site.position,
                        "strand": site.strand,
                        "site": site.site,
                        "protospacer": site.protospacer,
                        "pam": site.pam,
                        "gc_percent": round(site.gc_percent, 2),
                        "off_targets_1bp": report.count_1bp,
                        "off_targets_2bp": report.count_2bp,
                    }
                )
    except (SequenceError, ValueError) as exc:
        _fail_validation(str(exc))
    if as_json:
        click.echo(json.dumps(rows, indent=2))
        return
    header = ["query", "position", "strand", "site", "protospacer", "pam", "gc_percent", "off_targets_1bp", "off_targets_2bp"]
    click.echo("\t".join(header))
    for row in rows:
        click.echo("\t".join(str(row[k]) for k in header))


@main.group()
def fixtures():
    """Recorded request/response fixtures for offline mode."""


@fixtures.command("record")
@click.option("--requests", "requests_file", required=True, type=click.Path(path_type=Path),
              help='JSON list of {"url": ..., "params": {...}}')
@click.option("--fixtures-dir", required=True, type=click.Path(path_type=Path))
def fixtures_record(requests_file, fixtures_dir):
    """Fetch each listed request live and record it as a fixture."""
    from combine.datasources import Descriptor, FixtureStore, HttpTransport
    from combine.datasources.transport import DataSourceError

    try:
        entries = json.loads(requests_file.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        _fail_io(str(exc))
    store = FixtureStore(fixtures_dir)
    transport = HttpTransport()
    failures = 0
    for entry in entries:
        descriptor = Descriptor.get(entry["url"], entry.get("params", {}))
        try:
            response = transport.fetch(descriptor)
        except DataSourceError as exc:
            click.echo(f"FAIL {descriptor.normalized()}: {exc}", err=True)
            failures += 1
            continue
        path = store.record(descriptor, response)
        click.echo(f"recorded {descriptor.normalized()} -> {path.name}")
    if failures:
        sys.exit(2)


@fixtures.command("verify")
@click.option("--fixtures-dir", required=True, type=click.Path(path_type=Path))
def fixtures_verify(fixtures_dir):
    """Check fixture files against their descriptor hashes."""
    from combine.datasources import FixtureStore

    problems = FixtureStore(fixtures_dir).verify()
    for problem in problems:
        click.echo(problem, err=True)
    if problems:
        sys.exit(1)
    click.echo("fixtures ok")


if __name__ == "__main__":
    main()
