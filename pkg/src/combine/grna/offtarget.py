"""Mismatch-tolerant off-target scanning against reference sequences.

The matcher vectorizes the scan with numpy but its results are contractually
identical to a naive double-loop Hamming scan: a locus matches at distance d
when its PAM region satisfies the PAM rule exactly and its protospacer region
is d substitutions away. N in the reference never matches anything. Exact
(d=0) loci are on-target occurrences: listed, flagged, excluded from counts.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from combine.grna.sequence import DnaSequence, SequenceError, reverse_complement
from combine.grna.sites import PROTOSPACER_LEN, SITE_LEN, TargetSite, check_pam_pattern

_N_BYTE = ord("N")


@dataclass(frozen=True)
class Locus:
    reference: str  # record name
    position: int  # 0-based window start on the + strand of the reference
    strand: str
    sequence: str  # 23 nt as targeted (reverse complement for "-")
    mismatches: int

    @property
    def exact(self) -> bool:
        return self.mismatches == 0


@dataclass
class OffTargetReport:
    site: TargetSite
    count_1bp: int = 0
    count_2bp: int = 0
    loci: list[Locus] = field(default_factory=list)


def off_targets(
    site: TargetSite,
    reference: DnaSequence | list[DnaSequence],
    pam: str = "NGG",
) -> OffTargetReport:
    """Count 1- and 2-mismatch loci for a site across both reference strands."""
    pattern = check_pam_pattern(pam)
    references = [reference] if isinstance(reference, DnaSequence) else list(reference)
    if not references:
        raise SequenceError("no reference sequences")
    if all(len(r) < SITE_LEN for r in references):
        raise SequenceError(f"reference shorter than {SITE_LEN} nt")

    report = OffTargetReport(site=site)
    proto = np.frombuffer(site.protospacer.encode("ascii"), dtype=np.uint8)
    for ref in references:
        for strand in ("+", "-"):
            text = ref.sequence if strand == "+" else reverse_complement(ref.sequence)
            for offset, window, distance in _scan(text, proto, pattern):
                position = offset if strand == "+" else len(ref) - SITE_LEN - offset
                report.loci.append(
                    Locus(
                        reference=ref.name,
                        position=position,
                        strand=strand,
                        sequence=window,
                        mismatches=distance,
                    )
                )
    report.loci.sort(key=lambda l: (l.reference, l.position, l.strand))
    report.count_1bp = sum(1 for l in report.loci if l.mismatches == 1)
    report.count_2bp = sum(1 for l in report.loci if l.mismatches == 2)
    return report


def _scan(text: str, proto: np.ndarray, pattern: str):
    """Yield (offset, window, mismatches) for PAM-gated windows within 2 mismatches."""
    if len(text) < SITE_LEN:
        return
    data = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
    windows = np.lib.stride_tricks.sliding_window_view(data, SITE_LEN)

    pam_ok = np.ones(len(windows), dtype=bool)
    for i, want in enumerate(pattern):
        column = windows[:, PROTOSPACER_LEN + i]
        if want == "N":
            pam_ok &= column != _N_BYTE
        else:
            pam_ok &= column == ord(want)

    protos = windows[:, :PROTOSPACER_LEN]
    mism = ((protos != proto) | (protos == _N_BYTE)).sum(axis=1)
    hits = np.nonzero(pam_ok & (mism <= 2))[0]
    for offset in hits:
        yield int(offset), text[offset : offset + SITE_LEN], int(mism[offset])
