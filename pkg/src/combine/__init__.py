"""COMBINE workbench: connected app nodes over tabular data.

Subpackages:
    knowledge    -- knowledge-network document model, events, persistence
    analysis     -- local cheminformatics and graph analysis
    tiles        -- tile-pyramid rendering and level-of-detail policy
    datasources  -- ChEMBL / UniChem / UniProt / PDB clients with fixtures
    grna         -- Cas9 guide design and off-target search
    service      -- REST API and persistence stores
"""

__version__ = "0.1.0"
