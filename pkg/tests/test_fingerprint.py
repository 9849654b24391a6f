import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combine.analysis import (
    Fingerprint,
    chord_pairs,
    fingerprint,
    parse_smiles,
    similarity_matrix,
    tanimoto,
)

bitsets = st.sets(st.integers(min_value=0, max_value=2047), max_size=64)


def fp(smiles):
    return fingerprint(parse_smiles(smiles))


def test_fingerprint_determinism():
    assert fp("CC(=O)Oc1ccccc1C(=O)O") == fp("CC(=O)Oc1ccccc1C(=O)O")


def test_single_atoms_disjoint():
    a, b = fp("C"), fp("N")
    assert a.bits & b.bits == 0
    assert tanimoto(a, b) == 0.0


def test_benzene_toluene_share_paths():
    assert tanimoto(fp("c1ccccc1"), fp("Cc1ccccc1")) > 0.0


def test_cached_count_invariant():
    f = fp("CCO")
    assert f.count == f.bits.bit_count()
    with pytest.raises(ValueError):
        Fingerprint(width=2048, bits=0b101, count=1)


def test_tanimoto_identity():
    f = fp("CCN")
    assert tanimoto(f, f) == 1.0


def test_tanimoto_both_empty():
    e = Fingerprint.from_bits([])
    assert tanimoto(e, e) == 1.0


def test_tanimoto_known_case():
    a = Fingerprint.from_bits([1, 2, 3])
    b = Fingerprint.from_bits([2, 3, 4])
    assert tanimoto(a, b) == 0.5


def test_width_mismatch():
    with pytest.raises(ValueError):
        tanimoto(Fingerprint.from_bits([0], width=64), Fingerprint.from_bits([0], width=128))


@given(bitsets, bitsets)
def test_tanimoto_symmetric_and_bounded(xs, ys):
    a, b = Fingerprint.from_bits(xs), Fingerprint.from_bits(ys)
    t = tanimoto(a, b)
    assert t == tanimoto(b, a)
    assert 0.0 <= t <= 1.0


@given(bitsets)
def test_tanimoto_self_is_one(xs):
    a = Fingerprint.from_bits(xs)
    assert tanimoto(a, a) == 1.0


def test_similarity_matrix_single():
    m = similarity_matrix([fp("C")])
    assert m.n == 1 and m.values == ()


def test_similarity_matrix_duplicates_zero():
    f = fp("CCO")
    m = similarity_matrix([f, f, f])
    assert all(v == 0.0 for v in m.values)


def test_similarity_matrix_matches_pairwise_recomputation():
    rng = random.Random(7)
    fps = [Fingerprint.from_bits(rng.sample(range(2048), rng.randint(1, 40))) for _ in range(10)]
    m = similarity_matrix(fps)
    for i in range(10):
        for j in range(10):
            assert m.get(i, j) == pytest.approx(1.0 - tanimoto(fps[i], fps[j]), abs=0.0)


def test_chord_pairs_threshold_zero_gives_all():
    fps = [fp(s) for s in ("C", "N", "O", "CC")]
    assert len(chord_pairs(fps, 0.0)) == 6


def test_chord_pairs_threshold_one():
    fps = [fp(s) for s in ("C", "N", "O")]
    assert chord_pairs(fps, 1.0) == []
    f = fp("CC")
    assert chord_pairs([f, f], 1.0) == [(0, 1)]


def test_chord_pairs_matches_recomputation():
    rng = random.Random(11)
    fps = [Fingerprint.from_bits(rng.sample(range(2048), 20)) for _ in range(20)]
    got = chord_pairs(fps, 0.8)
    expected = [
        (i, j)
        for i in range(20)
        for j in range(i + 1, 20)
        if tanimoto(fps[i], fps[j]) >= 0.8
    ]
    assert got == expected
    assert got == sorted(got)
