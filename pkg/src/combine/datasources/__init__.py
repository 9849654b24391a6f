"""Public-database clients with caching, rate limiting, and offline fixtures."""

from combine.datasources.chembl import (
    ActivityRecord,
    ChemblClient,
    CompoundRecord,
    active_targets,
)
from combine.datasources.config import DataSourceConfig
from combine.datasources.pdb import PdbClient, PdbRecord
from combine.datasources.transport import (
    Descriptor,
    DiskCache,
    FetchedResponse,
    FixtureMissingError,
    FixtureStore,
    HttpTransport,
    NotFoundError,
    PayloadError,
    RateLimiter,
    StatusError,
    TransportError,
)
from combine.datasources.unichem import UnichemClient, XrefRecord
from combine.datasources.uniprot import TargetRecord, UniprotClient

__all__ = [
    "ActivityRecord",
    "ChemblClient",
    "CompoundRecord",
    "DataSourceConfig",
    "Descriptor",
    "DiskCache",
    "FetchedResponse",
    "FixtureMissingError",
    "FixtureStore",
    "HttpTransport",
    "NotFoundError",
    "PayloadError",
    "PdbClient",
    "PdbRecord",
    "RateLimiter",
    "StatusError",
    "TargetRecord",
    "TransportError",
    "UnichemClient",
    "UniprotClient",
    "XrefRecord",
    "active_targets",
]
