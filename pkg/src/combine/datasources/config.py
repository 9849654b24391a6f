"""Environment-driven configuration for the datasource clients."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from combine.datasources.transport import DiskCache, FixtureStore, HttpTransport

DEFAULT_CHEMBL_BASE = "https://www.ebi.ac.uk/chembl/api/data"
DEFAULT_UNICHEM_BASE = "https://www.ebi.ac.uk/unichem"
DEFAULT_UNIPROT_BASE = "https://rest.uniprot.org"
DEFAULT_PDB_BASE = "https://data.rcsb.org"


@dataclass
class DataSourceConfig:
    chembl_base: str = DEFAULT_CHEMBL_BASE
    unichem_base: str = DEFAULT_UNICHEM_BASE
    uniprot_base: str = DEFAULT_UNIPROT_BASE
    pdb_base: str = DEFAULT_PDB_BASE
    cache_dir: str | None = None
    fixtures_dir: str | None = None
    offline: bool = False

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None) -> "DataSourceConfig":
        env = os.environ if env is None else env
        return cls(
            chembl_base=env.get("COMBINE_CHEMBL_BASE", DEFAULT_CHEMBL_BASE),
            unichem_base=env.get("COMBINE_UNICHEM_BASE", DEFAULT_UNICHEM_BASE),
            uniprot_base=env.get("COMBINE_UNIPROT_BASE", DEFAULT_UNIPROT_BASE),
            pdb_base=env.get("COMBINE_PDB_BASE", DEFAULT_PDB_BASE),
            cache_dir=env.get("COMBINE_CACHE_DIR"),
            fixtures_dir=env.get("COMBINE_FIXTURES_DIR"),
            offline=env.get("COMBINE_OFFLINE", "") == "1",
        )

    def build_transport(self, **overrides) -> HttpTransport:
        fixtures = FixtureStore(Path(self.fixtures_dir)) if self.fixtures_dir else None
        cache = DiskCache(Path(self.cache_dir)) if self.cache_dir else None
        kwargs = dict(offline=self.offline, fixtures=fixtures, cache=cache)
        kwargs.update(overrides)
        return HttpTransport(**kwargs)
