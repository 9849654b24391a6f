"""ChEMBL client: similarity and substructure searches, bioactivity records."""

from __future__ import annotations

import re
from dataclasses import dataclass
from urllib.parse import quote, urlsplit

from combine.analysis import parse_smiles
from combine.datasources.transport import HttpTransport, PayloadError, parse_json

CHEMBL_ID = re.compile(r"^CHEMBL[0-9]+$")
PAGE_LIMIT = 200


@dataclass(frozen=True)
class CompoundRecord:
    chembl_id: str
    smiles: str
    inchikey: str
    name: str | None = None
    score: float | None = None  # percent similarity where applicable

    def __post_init__(self):
        if not CHEMBL_ID.match(self.chembl_id):
            raise ValueError(f"malformed ChEMBL id {self.chembl_id!r}")


@dataclass(frozen=True)
class ActivityRecord:
    assay_id: str
    target_id: str
    activity_type: str
    value: float | None
    unit: str | None
    pchembl: float | None

    def __post_init__(self):
        if self.pchembl is not None and not 0.0 < self.pchembl < 15.0:
            raise ValueError(f"pChEMBL {self.pchembl} outside (0, 15)")


class ChemblClient:
    def __init__(self, transport: HttpTransport, base: str):
        self.transport = transport
        self.base = base.rstrip("/")

    def similarity_search(self, smiles: str, cutoff: float) -> list[CompoundRecord]:
        """Similarity hits at or above the percent cutoff, best first."""
        if not 40 <= cutoff <= 100:
            raise ValueError(f"cutoff {cutoff} outside the service range [40, 100]")
        parse_smiles(smiles)  # client-side validation before any request
        url = f"{self.base}/similarity/{quote(smiles, safe='')}/{int(cutoff)}.json"
        records = self._paged_molecules(url)
        records.sort(key=lambda r: -(r.score or 0.0))
        return records

    def substructure_search(self, smiles: str) -> list[CompoundRecord]:
        parse_smiles(smiles)
        url = f"{self.base}/substructure/{quote(smiles, safe='')}.json"
        return self._paged_molecules(url)

    def _paged_molecules(self, url: str) -> list[CompoundRecord]:
        records = []
        params = {"limit": str(PAGE_LIMIT)}
        while url:
            doc = parse_json(self.transport.get(url, params), url)
            try:
                for raw in doc["molecules"]:
                    records.append(_compound_from_raw(raw, url))
                next_path = (doc.get("page_meta") or {}).get("next")
            except (KeyError, TypeError) as exc:
                raise PayloadError(f"{url}: unexpected payload shape ({exc})") from exc
            url = self._absolute(next_path) if next_path else None
            params = None
        return records

    def _absolute(self, path: str) -> str:
        if path.startswith("http"):
            return path
        parts = urlsplit(self.base)
        return f"{parts.scheme}://{parts.netloc}{path}"

    def fetch_activities(self, chembl_id: str, pchembl_min: float = 6.0) -> list[ActivityRecord]:
        """Activity records with a pChEMBL value at or above the threshold."""
        if not CHEMBL_ID.match(chembl_id):
            raise ValueError(f"malformed ChEMBL id {chembl_id!r}")
        url = f"{self.base}/activity.json"
        records = []
        params = {"molecule_chembl_id": chembl_id, "limit": str(PAGE_LIMIT)}
        while url:
            doc = parse_json(self.transport.get(url, params), url)
            try:
                for raw in doc["activities"]:
                    record = _activity_from_raw(raw, url)
                    if record.pchembl is not None and record.pchembl >= pchembl_min:
                        records.append(record)
                next_path = (doc.get("page_meta") or {}).get("next")
            except (KeyError, TypeError) as exc:
                raise PayloadError(f"{url}: unexpected payload shape ({exc})") from exc
            url = self._absolute(next_path) if next_path else None
            params = None
        return records


def active_targets(activities: list[ActivityRecord]) -> set[str]:
    """Distinct target ids across activity records."""
    return {a.target_id for a in activities}


def _compound_from_raw(raw: dict, url: str) -> CompoundRecord:
    try:
        structures = raw.get("molecule_structures") or {}
        score = raw.get("similarity")
        return CompoundRecord(
            chembl_id=raw["molecule_chembl_id"],
            smiles=structures.get("canonical_smiles", ""),
            inchikey=structures.get("standard_inchi_key", ""),
            name=raw.get("pref_name"),
            score=None if score is None else float(score),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise PayloadError(f"{url}: bad molecule record ({exc})") from exc


def _activity_from_raw(raw: dict, url: str) -> ActivityRecord:
    try:
        value = raw.get("standard_value")
        pchembl = raw.get("pchembl_value")
        return ActivityRecord(
            assay_id=raw["assay_chembl_id"],
            target_id=raw["target_chembl_id"],
            activity_type=raw.get("standard_type", ""),
            value=None if value is None else float(value),
            unit=raw.get("standard_units"),
            pchembl=None if pchembl is None else float(pchembl),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise PayloadError(f"{url}: bad activity record ({exc})") from exc
