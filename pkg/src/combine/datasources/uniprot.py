"""UniProt entry client."""

from __future__ import annotations

from dataclasses import dataclass

from combine.datasources.transport import HttpTransport, PayloadError, parse_json
from combine.knowledge.values import PROTEIN_ALPHABET


@dataclass(frozen=True)
class TargetRecord:
    accession: str
    protein_name: str
    organism: str
    sequence: str

    def __post_init__(self):
        if not self.sequence:
            raise ValueError("empty protein sequence")
        bad = set(self.sequence) - PROTEIN_ALPHABET
        if bad:
            raise ValueError(f"sequence characters {sorted(bad)} outside the protein alphabet")


class UniprotClient:
    def __init__(self, transport: HttpTransport, base: str):
        self.transport = transport
        self.base = base.rstrip("/")

    def fetch(self, accession: str) -> TargetRecord:
        if not accession or not accession.strip():
            raise ValueError("empty accession")
        url = f"{self.base}/uniprotkb/{accession}.json"
        doc = parse_json(self.transport.get(url), url)
        try:
            name = (
                doc.get("proteinDescription", {})
                .get("recommendedName", {})
                .get("fullName", {})
                .get("value", "")
            )
            record = TargetRecord(
                accession=doc["primaryAccession"],
                protein_name=name,
                organism=doc.get("organism", {}).get("scientificName", ""),
                sequence=doc["sequence"]["value"],
            )
        except (KeyError, TypeError) as exc:
            raise PayloadError(f"{url}: unexpected payload shape ({exc})") from exc
        except ValueError as exc:
            raise PayloadError(f"{url}: {exc}") from exc
        return record
