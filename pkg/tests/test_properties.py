import pytest

from combine.analysis import calc_properties, parse_smiles
from combine.analysis.properties import PropertyError, implicit_hydrogens


def props(smiles):
    return calc_properties(parse_smiles(smiles))


def test_methane():
    # 12.011 + 4 * 1.008 = 16.043
    rec = props("C")
    assert rec.molecular_weight == pytest.approx(16.04, abs=0.01)
    assert rec.heavy_atom_count == 1
    assert rec.ring_bond_count == 0


def test_benzene():
    # 6 * 12.011 + 6 * 1.008 = 78.114
    rec = props("c1ccccc1")
    assert rec.molecular_weight == pytest.approx(78.11, abs=0.01)
    assert rec.heavy_atom_count == 6
    assert rec.ring_bond_count == 1


def test_water():
    rec = props("O")
    assert rec.hbond_acceptors == 1
    assert rec.hbond_donors == 1
    assert rec.molecular_weight == pytest.approx(18.015, abs=0.01)


def test_implicit_hydrogen_rules():
    mol = parse_smiles("C=O")  # formaldehyde: C gets 2 H, O gets 0
    assert implicit_hydrogens(mol, 0) == 2
    assert implicit_hydrogens(mol, 1) == 0

    mol = parse_smiles("C#N")  # HCN
    assert implicit_hydrogens(mol, 0) == 1
    assert implicit_hydrogens(mol, 1) == 0

    mol = parse_smiles("c1ccncc1")  # pyridine: aromatic N carries no H
    assert implicit_hydrogens(mol, 3) == 0


def test_bracket_atoms_use_explicit_h():
    mol = parse_smiles("[CH3]C")  # radical-style carbon keeps its stated 3 H
    assert implicit_hydrogens(mol, 0) == 3


def test_aspirin_weight():
    # C9H8O4 = 9*12.011 + 8*1.008 + 4*15.999 = 180.159
    rec = props("CC(=O)Oc1ccccc1C(=O)O")
    assert rec.molecular_weight == pytest.approx(180.16, abs=0.01)
    assert rec.heavy_atom_count == 13
    assert rec.hbond_acceptors == 4
    assert rec.hbond_donors == 1


def test_missing_element_named():
    with pytest.raises(PropertyError, match="U"):
        calc_properties(parse_smiles("[U]"))
