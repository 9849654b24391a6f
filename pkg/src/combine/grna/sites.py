"""Candidate target-site enumeration: 23-mers ending in the PAM, both strands."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from combine.grna.sequence import DnaSequence, SequenceError, gc_content, reverse_complement

SITE_LEN = 23
PROTOSPACER_LEN = 20
PAM_LEN = 3

PAM_CHARS = frozenset("ACGTN")


@dataclass(frozen=True)
class TargetSite:
    position: int  # 0-based window start in the query
    strand: str  # "+" | "-"
    site: str  # 23 nt, 5'->3' on the targeted strand
    protospacer: str  # first 20 nt of site
    pam: str  # last 3 nt of site
    gc_percent: float

    def __post_init__(self):
        if self.site != self.protospacer + self.pam:
            raise ValueError("site must equal protospacer + PAM")


def check_pam_pattern(pam: str) -> str:
    pam = pam.upper()
    if len(pam) != PAM_LEN or any(ch not in PAM_CHARS for ch in pam):
        raise ValueError(f"PAM pattern must be 3 characters over ACGTN, got {pam!r}")
    return pam


def pam_matches(pattern: str, region: str) -> bool:
    """N in the pattern matches any concrete base; N in the region matches nothing."""
    for want, have in zip(pattern, region):
        if have not in "ACGT":
            return False
        if want != "N" and want != have:
            return False
    return True


def find_sites(
    query: str | DnaSequence,
    pam: str = "NGG",
    dedupe: str = "drop",
    gc_over: str = "protospacer",
) -> list[TargetSite]:
    """Enumerate unique 23-mer sites on both strands of the query.

    Minus-strand sites report the reverse complement of the query window.
    Windows containing N are skipped. With dedupe="drop" (the default), any
    23-mer appearing more than once among candidates is removed entirely;
    "keep-first" keeps the earliest occurrence instead.
    """
    if dedupe not in ("drop", "keep-first"):
        raise ValueError(f"unknown dedupe mode {dedupe!r}")
    if gc_over not in ("protospacer", "site"):
        raise ValueError(f"unknown gc_over mode {gc_over!r}")
    pattern = check_pam_pattern(pam)
    text = query.sequence if isinstance(query, DnaSequence) else DnaSequence(query).sequence
    if len(text) < SITE_LEN:
        raise SequenceError(f"query shorter than {SITE_LEN} nt")

    candidates: list[TargetSite] = []
    for pos in range(len(text) - SITE_LEN + 1):
        window = text[pos : pos + SITE_LEN]
        if "N" in window:
            continue
        if pam_matches(pattern, window[-PAM_LEN:]):
            candidates.append(_site(pos, "+", window, gc_over))
        rc = reverse_complement(window)
        if pam_matches(pattern, rc[-PAM_LEN:]):
            candidates.append(_site(pos, "-", rc, gc_over))

    counts = Counter(c.site for c in candidates)
    if dedupe == "drop":
        unique = [c for c in candidates if counts[c.site] == 1]
    else:
        seen: set[str] = set()
        unique = []
        for c in candidates:
            if c.site not in seen:
                seen.add(c.site)
                unique.append(c)
    unique.sort(key=lambda s: (s.position, 0 if s.strand == "+" else 1))
    return unique


def _site(pos: int, strand: str, sequence: str, gc_over: str) -> TargetSite:
    protospacer = sequence[:PROTOSPACER_LEN]
    return TargetSite(
        position=pos,
        strand=strand,
        site=sequence,
        protospacer=protospacer,
        pam=sequence[PROTOSPACER_LEN:],
        gc_percent=gc_content(protospacer if gc_over == "protospacer" else sequence),
    )
