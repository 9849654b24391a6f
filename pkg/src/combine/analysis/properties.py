"""Physicochemical descriptors over parsed molecules.

A deliberately small descriptor set: molecular weight, heavy atoms, ring
bonds, and H-bond donor/acceptor proxies. Implicit hydrogens follow standard
organic-subset valences; bracket atoms contribute only their explicit H count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from combine.analysis.smiles import AROMATIC, Molecule

# Average atomic masses. Bracket atoms outside this table raise.
ATOMIC_MASS = {
    "H": 1.008,
    "B": 10.811,
    "C": 12.011,
    "N": 14.007,
    "O": 15.999,
    "F": 18.998,
    "Na": 22.99,
    "Mg": 24.305,
    "Si": 28.085,
    "P": 30.974,
    "S": 32.06,
    "Cl": 35.45,
    "K": 39.098,
    "Ca": 40.078,
    "Fe": 55.845,
    "Cu": 63.546,
    "Zn": 65.38,
    "Se": 78.971,
    "Br": 79.904,
    "I": 126.904,
}

# Default valences for implicit-H assignment on organic-subset atoms.
DEFAULT_VALENCE = {"B": 3, "C": 4, "N": 3, "O": 2, "P": 3, "S": 2, "F": 1, "Cl": 1, "Br": 1, "I": 1}


class PropertyError(ValueError):
    pass


@dataclass(frozen=True)
class PropertyRecord:
    molecular_weight: float
    heavy_atom_count: int
    ring_bond_count: int
    hbond_acceptors: int  # N + O count
    hbond_donors: int  # N/O atoms bearing at least one H


def implicit_hydrogens(mol: Molecule, index: int) -> int:
    """Hydrogens attached to one atom, implicit or bracket-explicit."""
    atom = mol.atoms[index]
    if atom.explicit_h is not None:
        return atom.explicit_h
    valence = DEFAULT_VALENCE.get(atom.element)
    if valence is None:
        return 0
    total = 0.0
    for _, order in mol.neighbors(index):
        total += 1.5 if order == AROMATIC else order
    return max(0, valence - math.ceil(total))


def calc_properties(mol: Molecule) -> PropertyRecord:
    """Compute the descriptor record; raises PropertyError on unknown elements."""
    weight = 0.0
    h_mass = ATOMIC_MASS["H"]
    heavy = 0
    acceptors = 0
    donors = 0
    for i, atom in enumerate(mol.atoms):
        mass = ATOMIC_MASS.get(atom.element)
        if mass is None:
            raise PropertyError(f"element {atom.element!r} missing from mass table")
        h = implicit_hydrogens(mol, i)
        weight += mass + h * h_mass
        if atom.element != "H":
            heavy += 1
        if atom.element in ("N", "O"):
            acceptors += 1
            if h > 0:
                donors += 1
    return PropertyRecord(
        molecular_weight=weight,
        heavy_atom_count=heavy,
        ring_bond_count=mol.ring_bond_count,
        hbond_acceptors=acceptors,
        hbond_donors=donors,
    )
