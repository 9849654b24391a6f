"""DNA sequences, reverse complement, GC content, FASTA parsing."""

from __future__ import annotations

from dataclasses import dataclass

DNA_CHARS = frozenset("ACGTN")
_COMPLEMENT = str.maketrans("ACGTN", "TGCAN")


class SequenceError(ValueError):
    """Invalid sequence input; offset is the first offending character."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message if offset is None else f"{message} (offset {offset})")
        self.offset = offset


def _check(seq: str) -> str:
    for i, ch in enumerate(seq):
        if ch not in DNA_CHARS:
            raise SequenceError(f"invalid DNA character {ch!r}", i)
    return seq


@dataclass(frozen=True)
class DnaSequence:
    sequence: str
    name: str = ""

    def __post_init__(self):
        if not self.sequence:
            raise SequenceError("empty sequence")
        normalized = self.sequence.upper()
        _check(normalized)
        object.__setattr__(self, "sequence", normalized)

    def __len__(self) -> int:
        return len(self.sequence)


def reverse_complement(seq: str | DnaSequence) -> str:
    """Reverse complement; involutive, N maps to N."""
    text = seq.sequence if isinstance(seq, DnaSequence) else _check(seq.upper())
    return text.translate(_COMPLEMENT)[::-1]


def gc_content(seq: str | DnaSequence) -> float:
    """Percent G+C; N counts in the denominator only."""
    text = seq.sequence if isinstance(seq, DnaSequence) else _check(seq.upper())
    if not text:
        raise SequenceError("empty sequence")
    gc = sum(1 for ch in text if ch in "GC")
    return 100.0 * gc / len(text)


def parse_fasta(text: str, default_name: str = "seq") -> list[DnaSequence]:
    """Parse FASTA records; headerless input becomes one record."""
    records: list[DnaSequence] = []
    name: str | None = None
    parts: list[str] = []

    def flush():
        if name is None and not parts:
            return
        seq = "".join(parts)
        if not seq:
            raise SequenceError(f"record {name or default_name!r} has no sequence")
        records.append(DnaSequence(sequence=seq, name=name or default_name))

    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            flush()
            name = line[1:].split()[0] if line[1:].strip() else default_name
            parts = []
        else:
            parts.append(line)
    flush()
    if not records:
        raise SequenceError("no sequence records in input")
    return records
