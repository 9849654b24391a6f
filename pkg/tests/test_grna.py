import random

import pytest

from combine.grna import (
    DnaSequence,
    SequenceError,
    find_sites,
    gc_content,
    off_targets,
    parse_fasta,
    reverse_complement,
)
from combine.grna.sites import pam_matches


def oracle_off_target_counts(site, refs, pam="NGG"):
    """Naive double-loop Hamming scan over both strands."""
    counts = {0: 0, 1: 0, 2: 0}
    for ref in refs:
        for strand in ("+", "-"):
            text = ref.sequence if strand == "+" else reverse_complement(ref.sequence)
            for i in range(len(text) - 22):
                window = text[i : i + 23]
                if not pam_matches(pam, window[20:]):
                    continue
                mism = 0
                for a, b in zip(window[:20], site.protospacer):
                    if a != b or a == "N":
                        mism += 1
                        if mism > 2:
                            break
                if mism <= 2:
                    counts[mism] += 1
    return counts[1], counts[2]


def random_dna(rng, length):
    return "".join(rng.choice("ACGT") for _ in range(length))


# -- reverse complement / gc ------------------------------------------------


def test_rc_palindrome():
    assert reverse_complement("ACGT") == "ACGT"


def test_rc_simple():
    assert reverse_complement("AAA") == "TTT"


def test_rc_with_n():
    assert reverse_complement("ACGTN") == "NACGT"


def test_rc_involutive():
    rng = random.Random(1)
    for _ in range(50):
        s = random_dna(rng, rng.randint(1, 100))
        assert reverse_complement(reverse_complement(s)) == s


def test_rc_invalid_character_offset():
    with pytest.raises(SequenceError) as err:
        reverse_complement("ACUG")
    assert err.value.offset == 2


@pytest.mark.parametrize("seq,expected", [("ATGC", 50.0), ("AAAA", 0.0), ("GGCC", 100.0)])
def test_gc_content(seq, expected):
    assert gc_content(seq) == expected


def test_gc_content_counts_n_in_denominator():
    assert gc_content("GCNN") == 50.0


# -- find_sites ---------------------------------------------------------------


def test_single_plus_site():
    sites = find_sites("A" * 20 + "CGG")
    assert len(sites) == 1
    s = sites[0]
    assert s.strand == "+" and s.position == 0
    assert s.protospacer == "A" * 20 and s.pam == "CGG"
    assert s.gc_percent == 0.0
    assert s.site == s.protospacer + s.pam


def test_single_minus_site_reports_reverse_complement():
    sites = find_sites("CCG" + "T" * 20)
    assert len(sites) == 1
    s = sites[0]
    assert s.strand == "-" and s.position == 0
    assert s.site == "A" * 20 + "CGG"


def test_no_pam_no_sites():
    assert find_sites("A" * 23) == []


def test_query_too_short():
    with pytest.raises(SequenceError, match="shorter"):
        find_sites("ACGT")


def test_windows_with_n_skipped():
    assert find_sites("A" * 10 + "N" + "A" * 9 + "CGG") == []


def test_duplicate_23mers_dropped():
    seq = ("A" * 20 + "CGG") * 2  # same site at positions 0 and 23
    filtered = find_sites(seq)
    assert all(s.site != "A" * 20 + "CGG" for s in filtered)
    kept = find_sites(seq, dedupe="keep-first")
    assert any(s.site == "A" * 20 + "CGG" and s.position == 0 for s in kept)


def test_sites_sorted_by_position_then_strand():
    rng = random.Random(3)
    sites = find_sites(random_dna(rng, 300))
    keys = [(s.position, 0 if s.strand == "+" else 1) for s in sites]
    assert keys == sorted(keys)


def test_strand_swap_mirror_property():
    rng = random.Random(8)
    for _ in range(20):
        q = random_dna(rng, rng.randint(23, 200))
        fwd = find_sites(q)
        rev = find_sites(reverse_complement(q))
        fwd_set = {(s.site, s.strand) for s in fwd}
        rev_set = {(s.site, "+" if s.strand == "-" else "-") for s in rev}
        assert fwd_set == rev_set
        # positions mirror: window at p maps to len(q) - 23 - p
        fwd_pos = sorted((s.site, len(q) - 23 - s.position) for s in fwd)
        rev_pos = sorted((s.site, s.position) for s in rev)
        assert fwd_pos == rev_pos


def test_site_shape_invariants():
    rng = random.Random(12)
    sites = find_sites(random_dna(rng, 500))
    for s in sites:
        assert len(s.site) == 23
        assert s.site == s.protospacer + s.pam
        assert 0.0 <= s.gc_percent <= 100.0


def test_custom_pam():
    sites = find_sites("C" * 20 + "TTA", pam="TTN")
    assert len(sites) == 1
    assert sites[0].strand == "+" and sites[0].pam == "TTA"


# -- off_targets ----------------------------------------------------------------


def site_for(seq):
    sites = find_sites(seq)
    assert sites, "constructed query must contain a site"
    return sites[0]


def test_reference_equals_site_on_target_only():
    site = site_for("A" * 20 + "CGG")
    report = off_targets(site, DnaSequence(site.site))
    assert (report.count_1bp, report.count_2bp) == (0, 0)
    exact = [l for l in report.loci if l.exact]
    assert len(exact) == 1 and exact[0].position == 0 and exact[0].strand == "+"


def test_one_mismatch_copy_counted():
    site = site_for("A" * 20 + "CGG")
    variant = "A" * 10 + "C" + "A" * 9 + "CGG"  # one protospacer substitution
    ref = DnaSequence(site.site + "TTTT" + variant)
    report = off_targets(site, ref)
    assert (report.count_1bp, report.count_2bp) == (1, 0)
    assert all(l.mismatches <= 2 for l in report.loci)


def test_pam_gate_excludes_mutated_pam():
    site = site_for("A" * 20 + "CGG")
    broken = "A" * 20 + "CTT"  # PAM no longer NGG
    report = off_targets(site, DnaSequence(site.site + "TTTT" + broken))
    assert (report.count_1bp, report.count_2bp) == (0, 0)


def test_loci_verify_to_stated_distance():
    rng = random.Random(21)
    site = site_for(random_dna(rng, 200) + "A" * 20 + "CGG")
    ref = DnaSequence(random_dna(rng, 2000))
    report = off_targets(site, ref)
    for locus in report.loci:
        mism = sum(1 for a, b in zip(locus.sequence[:20], site.protospacer) if a != b)
        assert mism == locus.mismatches


def test_reference_too_short():
    site = site_for("A" * 20 + "CGG")
    with pytest.raises(SequenceError):
        off_targets(site, DnaSequence("ACGT"))


def test_matches_oracle_on_random_instances():
    rng = random.Random(99)
    for _ in range(30):
        query = random_dna(rng, rng.randint(23, 400))
        sites = find_sites(query)
        if not sites:
            continue
        site = rng.choice(sites)
        refs = [DnaSequence(random_dna(rng, rng.randint(23, 3000)), name="r1")]
        report = off_targets(site, refs)
        assert (report.count_1bp, report.count_2bp) == oracle_off_target_counts(site, refs)


def test_multi_record_reference():
    site = site_for("A" * 20 + "CGG")
    variant = "A" * 19 + "C" + "CGG"
    refs = [DnaSequence(site.site, name="a"), DnaSequence(variant, name="b")]
    report = off_targets(site, refs)
    assert report.count_1bp == 1
    assert {l.reference for l in report.loci} == {"a", "b"}


# -- fasta ---------------------------------------------------------------------


def test_parse_fasta_multi():
    records = parse_fasta(">one\nACGT\nACGT\n>two desc here\nTTTT\n")
    assert [r.name for r in records] == ["one", "two"]
    assert records[0].sequence == "ACGTACGT"


def test_parse_fasta_headerless():
    records = parse_fasta("acgt\n")
    assert len(records) == 1 and records[0].sequence == "ACGT"


def test_parse_fasta_empty_record():
    with pytest.raises(SequenceError):
        parse_fasta(">only-header\n")
