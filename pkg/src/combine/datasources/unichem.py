"""UniChem cross-reference client."""

from __future__ import annotations

import re
from dataclasses import dataclass

from combine.datasources.transport import HttpTransport, PayloadError, parse_json

INCHIKEY = re.compile(r"^[A-Z]{14}-[A-Z]{10}-[A-Z]$")


@dataclass(frozen=True)
class XrefRecord:
    source_id: int
    source_name: str
    compound_id: str

    def __post_init__(self):
        if self.source_id < 1:
            raise ValueError(f"source id {self.source_id} must be >= 1")


class UnichemClient:
    def __init__(self, transport: HttpTransport, base: str):
        self.transport = transport
        self.base = base.rstrip("/")
        self._source_names: dict[int, str] | None = None

    def source_names(self) -> dict[int, str]:
        """src_id -> name, fetched once per client."""
        if self._source_names is None:
            url = f"{self.base}/rest/sources"
            doc = parse_json(self.transport.get(url), url)
            try:
                self._source_names = {int(s["src_id"]): s["name"] for s in doc}
            except (KeyError, TypeError, ValueError) as exc:
                raise PayloadError(f"{url}: bad sources payload ({exc})") from exc
        return self._source_names

    def xrefs(self, inchikey: str) -> list[XrefRecord]:
        """Cross-references for one standard InChIKey."""
        if not INCHIKEY.match(inchikey):
            raise ValueError(f"InChIKey must be 14-10-1 uppercase blocks, got {inchikey!r}")
        url = f"{self.base}/rest/inchikey/{inchikey}"
        doc = parse_json(self.transport.get(url), url)
        if isinstance(doc, dict) and "error" in doc:
            return []
        names = self.source_names()
        records = []
        try:
            for raw in doc:
                source_id = int(raw["src_id"])
                records.append(
                    XrefRecord(
                        source_id=source_id,
                        source_name=names.get(source_id, f"source-{source_id}"),
                        compound_id=raw["src_compound_id"],
                    )
                )
        except (KeyError, TypeError, ValueError) as exc:
            raise PayloadError(f"{url}: bad xref record ({exc})") from exc
        return records
