"""Fixture builders for datasource tests: realistic recorded payloads."""

import json

from combine.datasources import Descriptor, FetchedResponse, FixtureStore, HttpTransport

CHEMBL_BASE = "https://chembl.test/chembl/api/data"
UNICHEM_BASE = "https://unichem.test/unichem"
UNIPROT_BASE = "https://uniprot.test"
PDB_BASE = "https://pdb.test"

ASPIRIN_SMILES = "CC(=O)Oc1ccccc1C(=O)O"
ASPIRIN_KEY = "BSYNRYMUTXBXSQ-UHFFFAOYSA-N"


def molecule(chembl_id, smiles, inchikey, name=None, similarity=None):
    raw = {
        "molecule_chembl_id": chembl_id,
        "pref_name": name,
        "molecule_structures": {"canonical_smiles": smiles, "standard_inchi_key": inchikey},
    }
    if similarity is not None:
        raw["similarity"] = str(similarity)
    return raw


def molecules_payload(mols, next_path=None):
    return {
        "molecules": mols,
        "page_meta": {"limit": 200, "next": next_path, "total_count": len(mols)},
    }


def activity(assay, target, pchembl=None, value=None, unit="nM", atype="IC50"):
    return {
        "assay_chembl_id": assay,
        "target_chembl_id": target,
        "standard_type": atype,
        "standard_value": value,
        "standard_units": unit,
        "pchembl_value": None if pchembl is None else str(pchembl),
    }


def record_json(store: FixtureStore, url: str, payload, params=None, status=200):
    body = json.dumps(payload).encode()
    store.record(Descriptor.get(url, params or {}), FetchedResponse(status=status, body=body))


def record_raw(store: FixtureStore, url: str, body: bytes, params=None, status=200):
    store.record(Descriptor.get(url, params or {}), FetchedResponse(status=status, body=body))


def offline_transport(tmp_path, build):
    """Create a fixture store via `build(store)` and wrap it offline."""
    store = FixtureStore(tmp_path / "fixtures")
    build(store)
    return HttpTransport(offline=True, fixtures=store)
