"""Local analysis: SMILES parsing, descriptors, similarity, clustering, graphs."""

from combine.analysis.activity import pchembl
from combine.analysis.cluster import Dendrogram, hcluster
from combine.analysis.fingerprint import (
    DistanceMatrix,
    Fingerprint,
    chord_pairs,
    fingerprint,
    similarity_matrix,
    tanimoto,
)
from combine.analysis.graph import WeightedEdge, WeightedGraph, mst, parse_edge_list
from combine.analysis.heatmap import Heatmap, color_ramp, heatmap_normalize
from combine.analysis.properties import PropertyRecord, calc_properties
from combine.analysis.smiles import Atom, Bond, Molecule, SmilesError, parse_smiles

__all__ = [
    "Atom",
    "Bond",
    "Dendrogram",
    "DistanceMatrix",
    "Fingerprint",
    "Heatmap",
    "Molecule",
    "PropertyRecord",
    "SmilesError",
    "WeightedEdge",
    "WeightedGraph",
    "calc_properties",
    "chord_pairs",
    "color_ramp",
    "fingerprint",
    "hcluster",
    "heatmap_normalize",
    "mst",
    "parse_edge_list",
    "parse_smiles",
    "pchembl",
    "similarity_matrix",
    "tanimoto",
]
