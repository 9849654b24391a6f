"""PDB entry client: metadata plus a lazy remote-ref to the structure image."""

from __future__ import annotations

import re
from dataclasses import dataclass

from combine.datasources.transport import HttpTransport, PayloadError, parse_json
from combine.knowledge.values import RemoteRef

PDB_ID = re.compile(r"^[0-9A-Za-z]{4}$")
DEFAULT_IMAGE_BASE = "https://cdn.rcsb.org/images/structures"


@dataclass(frozen=True)
class PdbRecord:
    pdb_id: str
    title: str
    image: RemoteRef


class PdbClient:
    def __init__(self, transport: HttpTransport, base: str, image_base: str = DEFAULT_IMAGE_BASE):
        self.transport = transport
        self.base = base.rstrip("/")
        self.image_base = image_base.rstrip("/")

    def fetch(self, pdb_id: str) -> PdbRecord:
        if not PDB_ID.match(pdb_id):
            raise ValueError(f"PDB id must be 4 alphanumeric characters, got {pdb_id!r}")
        pdb_id = pdb_id.upper()
        url = f"{self.base}/rest/v1/core/entry/{pdb_id}"
        doc = parse_json(self.transport.get(url), url)
        try:
            title = doc.get("struct", {}).get("title", "")
        except AttributeError as exc:
            raise PayloadError(f"{url}: unexpected payload shape ({exc})") from exc
        image_url = f"{self.image_base}/{pdb_id.lower()}_assembly-1.jpeg"
        return PdbRecord(
            pdb_id=pdb_id,
            title=title,
            image=RemoteRef(url=image_url, media_type="image/jpeg", policy="lazy"),
        )
