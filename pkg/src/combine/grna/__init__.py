"""Cas9 guide design: site enumeration and mismatch-tolerant off-target counts."""

from combine.grna.offtarget import Locus, OffTargetReport, off_targets
from combine.grna.sequence import (
    DnaSequence,
    SequenceError,
    gc_content,
    parse_fasta,
    reverse_complement,
)
from combine.grna.sites import TargetSite, find_sites

__all__ = [
    "DnaSequence",
    "Locus",
    "OffTargetReport",
    "SequenceError",
    "TargetSite",
    "find_sites",
    "gc_content",
    "off_targets",
    "parse_fasta",
    "reverse_complement",
]
