"""Durable stores: event-WAL-plus-snapshot networks and on-disk pyramids.

Every mutation appends its events to the network's WAL before the snapshot is
rewritten; a crash between the two recovers on next load by applying the WAL
tail to the snapshot. Writers are serialized per network id.
"""

from __future__ import annotations

import threading
from collections import OrderedDict
from pathlib import Path
from typing import Callable

from combine.analysis.graph import parse_edge_list
from combine.knowledge import canonical
from combine.knowledge.network import KnowledgeNetwork
from combine.knowledge.replay import apply_event
from combine.tiles import (
    TileCoord,
    build_pyramid,
    force_layout,
    import_layout,
    load_manifest,
    write_pyramid,
)
from combine.tiles.pyramid import tile_path


class StoreError(Exception):
    pass


class NetworkNotFound(StoreError):
    pass


class NetworkStore:
    def __init__(self, root: Path, registry):
        self.root = Path(root) / "networks"
        self.root.mkdir(parents=True, exist_ok=True)
        self.registry = registry
        self._locks: dict[str, threading.Lock] = {}
        self._locks_guard = threading.Lock()

    def _lock(self, network_id: str) -> threading.Lock:
        with self._locks_guard:
            if network_id not in self._locks:
                self._locks[network_id] = threading.Lock()
            return self._locks[network_id]

    def _snapshot_path(self, network_id: str) -> Path:
        return self.root / f"{network_id}.combine.json"

    def _wal_path(self, network_id: str) -> Path:
        return self.root / f"{network_id}.wal.jsonl"

    def create(self, network_id: str | None = None, annotation: str = "") -> KnowledgeNetwork:
        net = KnowledgeNetwork.create(network_id=network_id, annotation=annotation)
        if self._snapshot_path(net.id).exists():
            raise StoreError(f"network {net.id!r} already exists")
        with self._lock(net.id):
            self._write_snapshot(net)
        return net

    def exists(self, network_id: str) -> bool:
        return self._snapshot_path(network_id).exists()

    def list_ids(self) -> list[str]:
        return sorted(p.name.removesuffix(".combine.json") for p in self.root.glob("*.combine.json"))

    def get(self, network_id: str) -> KnowledgeNetwork:
        with self._lock(network_id):
            return self._load(network_id)

    def delete(self, network_id: str) -> None:
        with self._lock(network_id):
            snapshot = self._snapshot_path(network_id)
            if not snapshot.exists():
                raise NetworkNotFound(network_id)
            snapshot.unlink()
            self._wal_path(network_id).unlink(missing_ok=True)

    def import_network(self, net: KnowledgeNetwork, overwrite: bool = False) -> None:
        with self._lock(net.id):
            if not overwrite and self._snapshot_path(net.id).exists():
                raise StoreError(f"network {net.id!r} already exists")
            self._wal_path(net.id).unlink(missing_ok=True)
            self._write_snapshot(net)

    def mutate(self, network_id: str, fn: Callable[[KnowledgeNetwork], object]):
        """Run a mutating function under the per-network writer lock and persist."""
        with self._lock(network_id):
            net = self._load(network_id)
            before = len(net.events)
            result = fn(net)
            new_events = net.events[before:]
            if new_events:
                with self._wal_path(network_id).open("a") as wal:
                    for event in new_events:
                        wal.write(canonical.event_to_json(event) + "\n")
                self._write_snapshot(net)
            return result, net

    def _write_snapshot(self, net: KnowledgeNetwork) -> None:
        path = self._snapshot_path(net.id)
        tmp = path.with_suffix(".tmp")
        tmp.write_bytes(canonical.save(net))
        tmp.replace(path)

    def _load(self, network_id: str) -> KnowledgeNetwork:
        snapshot = self._snapshot_path(network_id)
        if not snapshot.exists():
            raise NetworkNotFound(network_id)
        net = canonical.load(snapshot.read_bytes())
        wal = self._wal_path(network_id)
        if wal.exists():
            recovered = False
            for line in wal.read_text().splitlines():
                if not line.strip():
                    continue
                event = canonical.event_from_json(line)
                if event.seq > len(net.events):
                    apply_event(net, event, self.registry)
                    recovered = True
            if recovered:
                self._write_snapshot(net)
        return net


class PyramidStore:
    def __init__(self, root: Path, tile_cache_size: int = 1024):
        self.root = Path(root) / "pyramids"
        self.root.mkdir(parents=True, exist_ok=True)
        self._cache: OrderedDict[tuple, bytes] = OrderedDict()
        self._cache_size = tile_cache_size
        self._cache_lock = threading.Lock()

    def list_ids(self) -> list[str]:
        return sorted(p.name for p in self.root.iterdir() if (p / "manifest.json").exists())

    def build(
        self,
        edges_text: str,
        layout_text: str | None = None,
        seed: int = 0,
        iterations: int = 50,
        use_mst: bool = False,
        palette: dict[str, tuple[int, int, int]] | None = None,
        categories: dict[str, str] | None = None,
    ):
        graph = parse_edge_list(edges_text)
        positions = import_layout(layout_text) if layout_text else force_layout(graph, seed, iterations)
        cat_by_index = {int(k): v for k, v in (categories or {}).items()}
        pyramid = build_pyramid(
            graph, positions, palette=palette, categories=cat_by_index, use_mst=use_mst
        )
        write_pyramid(pyramid, self.root / pyramid.manifest.pyramid_id)
        return pyramid.manifest

    def manifest(self, pyramid_id: str):
        path = self.root / pyramid_id
        if not (path / "manifest.json").exists():
            raise NetworkNotFound(pyramid_id)
        return load_manifest(path)

    def tile_bytes(self, pyramid_id: str, coord: TileCoord) -> bytes:
        key = (pyramid_id, coord)
        with self._cache_lock:
            if key in self._cache:
                self._cache.move_to_end(key)
                return self._cache[key]
        path = tile_path(self.root / pyramid_id, coord)
        if not path.exists():
            raise FileNotFoundError(path)
        data = path.read_bytes()
        with self._cache_lock:
            self._cache[key] = data
            self._cache.move_to_end(key)
            while len(self._cache) > self._cache_size:
                self._cache.popitem(last=False)
        return data
