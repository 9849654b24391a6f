"""Server configuration, validated in one pass with a full problem report."""

from __future__ import annotations

import os
from pathlib import Path

from pydantic import BaseModel, Field

from combine.datasources.config import (
    DEFAULT_CHEMBL_BASE,
    DEFAULT_PDB_BASE,
    DEFAULT_UNICHEM_BASE,
    DEFAULT_UNIPROT_BASE,
    DataSourceConfig,
)
from combine.tiles.viewport import DEFAULT_LOD_THRESHOLD


class ConfigError(ValueError):
    def __init__(self, problems: list[str]):
        super().__init__("invalid configuration:\n" + "\n".join(f"  - {p}" for p in problems))
        self.problems = problems


class ServerConfig(BaseModel):
    host: str = "127.0.0.1"
    port: int = 8710
    data_dir: Path = Path("./combine-data")
    offline: bool = False
    chembl_base: str = DEFAULT_CHEMBL_BASE
    unichem_base: str = DEFAULT_UNICHEM_BASE
    uniprot_base: str = DEFAULT_UNIPROT_BASE
    pdb_base: str = DEFAULT_PDB_BASE
    fixtures_dir: Path | None = None
    cache_dir: Path | None = None
    tile_cache_size: int = Field(default=1024, description="tiles held in memory")
    lod_threshold: float = DEFAULT_LOD_THRESHOLD

    @classmethod
    def from_env(cls, env: dict[str, str] | None = None, **overrides) -> "ServerConfig":
        env = os.environ if env is None else env
        ds = DataSourceConfig.from_env(env)
        values = dict(
            offline=ds.offline,
            chembl_base=ds.chembl_base,
            unichem_base=ds.unichem_base,
            uniprot_base=ds.uniprot_base,
            pdb_base=ds.pdb_base,
            fixtures_dir=ds.fixtures_dir,
            cache_dir=ds.cache_dir,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        config = cls(**values)
        config.check()
        return config

    def check(self) -> "ServerConfig":
        """Collect every configuration problem before aborting."""
        problems = []
        if not 1 <= self.port <= 65535:
            problems.append(f"port {self.port} outside 1..65535")
        if self.tile_cache_size < 0:
            problems.append(f"tile_cache_size {self.tile_cache_size} must be >= 0")
        if self.lod_threshold <= 0:
            problems.append(f"lod_threshold {self.lod_threshold} must be positive")
        if self.offline and self.fixtures_dir is None:
            problems.append("offline mode requires a fixtures directory (COMBINE_FIXTURES_DIR)")
        if self.fixtures_dir is not None and not Path(self.fixtures_dir).is_dir():
            problems.append(f"fixtures directory {self.fixtures_dir} does not exist")
        if problems:
            raise ConfigError(problems)
        return self

    def datasource_config(self) -> DataSourceConfig:
        return DataSourceConfig(
            chembl_base=self.chembl_base,
            unichem_base=self.unichem_base,
            uniprot_base=self.uniprot_base,
            pdb_base=self.pdb_base,
            cache_dir=None if self.cache_dir is None else str(self.cache_dir),
            fixtures_dir=None if self.fixtures_dir is None else str(self.fixtures_dir),
            offline=self.offline,
        )
