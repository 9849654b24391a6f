"""Typed cell values for app-node tables.

Cells are one of eight variants; the column declares the kind and a cell is
either null or a value of that kind. Persisted numbers must be finite, and
bio-sequences must stay within their declared alphabet.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

DNA_ALPHABET = frozenset("ACGTN")
PROTEIN_ALPHABET = frozenset("ACDEFGHIKLMNPQRSTVWYX")
ALPHABETS = {"DNA": DNA_ALPHABET, "protein": PROTEIN_ALPHABET}

FETCH_POLICIES = ("eager", "lazy")


@dataclass(frozen=True)
class Text:
    value: str


@dataclass(frozen=True)
class Number:
    value: float

    def __post_init__(self):
        object.__setattr__(self, "value", float(self.value))


@dataclass(frozen=True)
class Identifier:
    namespace: str
    value: str


@dataclass(frozen=True)
class ChemicalStructure:
    smiles: str


@dataclass(frozen=True)
class BioSequence:
    alphabet: str  # "DNA" | "protein"
    sequence: str


@dataclass(frozen=True)
class RemoteRef:
    url: str
    media_type: str
    policy: str = "lazy"


@dataclass(frozen=True)
class BlobRef:
    sha256: str
    media_type: str


CellValue = Union[Text, Number, Identifier, ChemicalStructure, BioSequence, RemoteRef, BlobRef, None]

KIND_TEXT = "text"
KIND_NUMBER = "number"
KIND_IDENTIFIER = "identifier"
KIND_STRUCTURE = "chemical-structure"
KIND_SEQUENCE = "bio-sequence"
KIND_REMOTE = "remote-ref"
KIND_BLOB = "blob-ref"

CELL_KINDS = (
    KIND_TEXT,
    KIND_NUMBER,
    KIND_IDENTIFIER,
    KIND_STRUCTURE,
    KIND_SEQUENCE,
    KIND_REMOTE,
    KIND_BLOB,
)

_KIND_OF_TYPE = {
    Text: KIND_TEXT,
    Number: KIND_NUMBER,
    Identifier: KIND_IDENTIFIER,
    ChemicalStructure: KIND_STRUCTURE,
    BioSequence: KIND_SEQUENCE,
    RemoteRef: KIND_REMOTE,
    BlobRef: KIND_BLOB,
}


def kind_of(value: CellValue) -> str | None:
    """Kind tag of a cell value, or None for null."""
    if value is None:
        return None
    return _KIND_OF_TYPE[type(value)]


def cell_problem(value: CellValue, kind: str) -> str | None:
    """Why a cell is invalid for a column kind, or None when it is fine."""
    if value is None:
        return None
    actual = kind_of(value)
    if actual != kind:
        return f"cell kind {actual} does not match column kind {kind}"
    if isinstance(value, Number) and not math.isfinite(value.value):
        return "number cell is not finite"
    if isinstance(value, BioSequence):
        alphabet = ALPHABETS.get(value.alphabet)
        if alphabet is None:
            return f"unknown alphabet {value.alphabet!r}"
        bad = set(value.sequence) - alphabet
        if bad:
            return f"sequence characters {sorted(bad)} outside {value.alphabet} alphabet"
    if isinstance(value, RemoteRef) and value.policy not in FETCH_POLICIES:
        return f"unknown fetch policy {value.policy!r}"
    return None
