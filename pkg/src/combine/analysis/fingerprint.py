"""Path fingerprints, Tanimoto similarity, distance matrices, chord pairs.

Fingerprints hash linear atom paths of 1..7 atoms into a 2048-bit set. Path
labels interleave element symbols (lowercase when aromatic) with bond symbols
and are canonicalized to the lexicographically smaller reading direction, so
the same path found from either end sets the same bit.
"""

from __future__ import annotations

from dataclasses import dataclass

from combine.analysis.smiles import AROMATIC, Molecule

FP_WIDTH = 2048
MAX_PATH_ATOMS = 7

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1

_BOND_SYMBOL = {1: "-", 2: "=", 3: "#", AROMATIC: ":"}


def _fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for byte in data:
        h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


@dataclass(frozen=True)
class Fingerprint:
    width: int
    bits: int  # bitmask
    count: int  # cached population count

    def __post_init__(self):
        if self.bits.bit_count() != self.count:
            raise ValueError("cached count does not match population count")

    @classmethod
    def from_bits(cls, positions, width: int = FP_WIDTH) -> "Fingerprint":
        mask = 0
        for p in positions:
            if not 0 <= p < width:
                raise ValueError(f"bit {p} outside width {width}")
            mask |= 1 << p
        return cls(width=width, bits=mask, count=mask.bit_count())


def fingerprint(mol: Molecule) -> Fingerprint:
    """Hash all linear paths of 1..7 atoms into a 2048-bit fingerprint."""
    adjacency: list[list[tuple[int, int | str]]] = [[] for _ in mol.atoms]
    for b in mol.bonds:
        adjacency[b.a].append((b.b, b.order))
        adjacency[b.b].append((b.a, b.order))

    labels = [a.element.lower() if a.aromatic else a.element for a in mol.atoms]
    mask = 0

    def walk(path: list[int], text: str):
        nonlocal mask
        forward = text
        backward = _reverse_label(path, mol, labels)
        canonical = forward if forward <= backward else backward
        mask |= 1 << (_fnv1a64(canonical.encode()) % FP_WIDTH)
        if len(path) == MAX_PATH_ATOMS:
            return
        for nxt, order in adjacency[path[-1]]:
            if nxt in path:
                continue
            walk(path + [nxt], text + _BOND_SYMBOL[order] + labels[nxt])

    for start in range(len(mol.atoms)):
        walk([start], labels[start])
    return Fingerprint(width=FP_WIDTH, bits=mask, count=mask.bit_count())


def _reverse_label(path: list[int], mol: Molecule, labels: list[str]) -> str:
    orders = {}
    for b in mol.bonds:
        orders[(b.a, b.b)] = b.order
        orders[(b.b, b.a)] = b.order
    parts = [labels[path[-1]]]
    for i in range(len(path) - 1, 0, -1):
        parts.append(_BOND_SYMBOL[orders[(path[i], path[i - 1])]])
        parts.append(labels[path[i - 1]])
    return "".join(parts)


def tanimoto(a: Fingerprint, b: Fingerprint) -> float:
    """|a AND b| / |a OR b|; 1.0 when both fingerprints are empty."""
    if a.width != b.width:
        raise ValueError(f"fingerprint width mismatch: {a.width} != {b.width}")
    union = (a.bits | b.bits).bit_count()
    if union == 0:
        return 1.0
    return (a.bits & b.bits).bit_count() / union


@dataclass(frozen=True)
class DistanceMatrix:
    """Symmetric distances in [0,1] stored as the upper triangle, zero diagonal."""

    n: int
    values: tuple[float, ...]  # row-major upper triangle, length n*(n-1)/2

    def __post_init__(self):
        expected = self.n * (self.n - 1) // 2
        if len(self.values) != expected:
            raise ValueError(f"expected {expected} values for n={self.n}")
        for v in self.values:
            if not 0.0 <= v <= 1.0:
                raise ValueError(f"distance {v} outside [0,1]")

    def get(self, i: int, j: int) -> float:
        if i == j:
            return 0.0
        if i > j:
            i, j = j, i
        if not (0 <= i < j < self.n):
            raise IndexError((i, j))
        return self.values[i * self.n - i * (i + 1) // 2 + (j - i - 1)]


def similarity_matrix(fps: list[Fingerprint]) -> DistanceMatrix:
    """Pairwise distances d(i,j) = 1 - tanimoto(i,j)."""
    if not fps:
        raise ValueError("empty fingerprint list")
    values = []
    for i in range(len(fps)):
        for j in range(i + 1, len(fps)):
            values.append(1.0 - tanimoto(fps[i], fps[j]))
    return DistanceMatrix(n=len(fps), values=tuple(values))


def chord_pairs(fps: list[Fingerprint], threshold: float) -> list[tuple[int, int]]:
    """All index pairs (i, j), i < j, with tanimoto >= threshold, sorted."""
    if not 0.0 <= threshold <= 1.0:
        raise ValueError(f"threshold {threshold} outside [0,1]")
    pairs = []
    for i in range(len(fps)):
        for j in range(i + 1, len(fps)):
            if tanimoto(fps[i], fps[j]) >= threshold:
                pairs.append((i, j))
    return pairs
