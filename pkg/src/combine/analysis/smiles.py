"""SMILES parser for the organic subset used by structure tables.

Supported: organic-subset atoms (B C N O P S F Cl Br I), aromatic lowercase
(b c n o p s), bracket atoms with isotope/charge/explicit H, bonds - = # :,
branches, ring closures (digits and %nn). Stereo markers (/ \\ @ @@) are
accepted and ignored. No canonical writer is provided.
"""

from __future__ import annotations

from dataclasses import dataclass, field

AROMATIC = "aromatic"

ORGANIC_SUBSET = ("Cl", "Br", "B", "C", "N", "O", "P", "S", "F", "I")
AROMATIC_ORGANIC = ("b", "c", "n", "o", "p", "s")

# Element symbols accepted inside brackets. Wider than the organic subset so
# that identifiers like [Na+] parse; mass lookup happens later in properties.
BRACKET_ELEMENTS = frozenset(
    """H He Li Be B C N O F Ne Na Mg Al Si P S Cl Ar K Ca Sc Ti V Cr Mn Fe Co
    Ni Cu Zn Ga Ge As Se Br Kr Rb Sr Y Zr Nb Mo Tc Ru Rh Pd Ag Cd In Sn Sb Te
    I Xe Cs Ba La Ce Pr Nd Pt Au Hg Tl Pb Bi W Re Os Ir U""".split()
)
AROMATIC_BRACKET = frozenset(["b", "c", "n", "o", "p", "s", "se", "as"])

BOND_ORDERS = {"-": 1, "=": 2, "#": 3, ":": AROMATIC, "/": 1, "\\": 1}


class SmilesError(ValueError):
    """Parse failure; carries the 0-based character offset."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Atom:
    element: str
    charge: int = 0
    aromatic: bool = False
    explicit_h: int | None = None


@dataclass(frozen=True)
class Bond:
    a: int
    b: int
    order: int | str  # 1, 2, 3, or AROMATIC


@dataclass
class Molecule:
    atoms: list[Atom] = field(default_factory=list)
    bonds: list[Bond] = field(default_factory=list)
    ring_bond_count: int = 0

    def neighbors(self, i: int) -> list[tuple[int, int | str]]:
        out = []
        for b in self.bonds:
            if b.a == i:
                out.append((b.b, b.order))
            elif b.b == i:
                out.append((b.a, b.order))
        return out


def parse_smiles(text: str) -> Molecule:
    """Parse SMILES text into a Molecule, raising SmilesError with offset."""
    if not text:
        raise SmilesError("empty SMILES", 0)
    return _Parser(text).run()


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.mol = Molecule()
        self.prev: int | None = None  # atom awaiting the next bond
        self.pending_bond: tuple[int | str, int] | None = None  # (order, offset)
        self.branch_stack: list[tuple[int, int]] = []  # (atom index, '(' offset)
        # ring-closure number -> (atom index, bond order or None, digit offset)
        self.open_rings: dict[int, tuple[int, int | str | None, int]] = {}
        self.bond_pairs: set[tuple[int, int]] = set()

    def run(self) -> Molecule:
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch in BOND_ORDERS:
                if self.pending_bond is not None:
                    raise SmilesError("two bond symbols in a row", self.pos)
                self.pending_bond = (BOND_ORDERS[ch], self.pos)
                self.pos += 1
            elif ch == "(":
                if self.prev is None:
                    raise SmilesError("branch before any atom", self.pos)
                self.branch_stack.append((self.prev, self.pos))
                self.pos += 1
            elif ch == ")":
                if not self.branch_stack:
                    raise SmilesError("unmatched ')'", self.pos)
                self.prev = self.branch_stack.pop()[0]
                self.pos += 1
            elif ch.isdigit() or ch == "%":
                self._ring_closure()
            elif ch == "[":
                self._bracket_atom()
            else:
                self._organic_atom()
        if self.branch_stack:
            raise SmilesError("unmatched '('", self.branch_stack[-1][1])
        if self.open_rings:
            num, (_, _, off) = min(self.open_rings.items(), key=lambda kv: kv[1][2])
            raise SmilesError(f"ring closure {num} unmatched", off)
        if self.pending_bond is not None:
            raise SmilesError("dangling bond symbol", self.pending_bond[1])
        return self.mol

    def _add_atom(self, atom: Atom) -> None:
        self.mol.atoms.append(atom)
        idx = len(self.mol.atoms) - 1
        if self.prev is not None:
            order = self._take_bond(self.prev, idx)
            self._add_bond(self.prev, idx, order, self.pos)
        elif self.pending_bond is not None:
            raise SmilesError("bond symbol before first atom", self.pending_bond[1])
        self.prev = idx

    def _take_bond(self, a: int, b: int) -> int | str:
        if self.pending_bond is not None:
            order = self.pending_bond[0]
            self.pending_bond = None
            return order
        if self.mol.atoms[a].aromatic and self.mol.atoms[b].aromatic:
            return AROMATIC
        return 1

    def _add_bond(self, a: int, b: int, order: int | str, offset: int) -> None:
        key = (min(a, b), max(a, b))
        if a == b or key in self.bond_pairs:
            raise SmilesError("duplicate bond between atom pair", offset)
        self.bond_pairs.add(key)
        self.mol.bonds.append(Bond(key[0], key[1], order))

    def _ring_closure(self) -> None:
        start = self.pos
        if self.text[self.pos] == "%":
            if self.pos + 2 >= len(self.text) or not self.text[self.pos + 1 : self.pos + 3].isdigit():
                raise SmilesError("'%' needs two digits", self.pos)
            num = int(self.text[self.pos + 1 : self.pos + 3])
            self.pos += 3
        else:
            num = int(self.text[self.pos])
            self.pos += 1
        if self.prev is None:
            raise SmilesError("ring closure before any atom", start)
        pending = None
        if self.pending_bond is not None:
            pending = self.pending_bond[0]
            self.pending_bond = None
        if num in self.open_rings:
            other, opened_order, _ = self.open_rings.pop(num)
            if opened_order is not None and pending is not None and opened_order != pending:
                raise SmilesError(f"conflicting bond orders on ring closure {num}", start)
            order = opened_order if opened_order is not None else pending
            if order is None:
                a, b = self.mol.atoms[other], self.mol.atoms[self.prev]
                order = AROMATIC if (a.aromatic and b.aromatic) else 1
            self._add_bond(other, self.prev, order, start)
            self.mol.ring_bond_count += 1
        else:
            self.open_rings[num] = (self.prev, pending, start)

    def _organic_atom(self) -> None:
        text, pos = self.text, self.pos
        for sym in ORGANIC_SUBSET:
            if text.startswith(sym, pos):
                self.pos += len(sym)
                self._add_atom(Atom(sym))
                return
        ch = text[pos]
        if ch in AROMATIC_ORGANIC:
            self.pos += 1
            self._add_atom(Atom(ch.upper(), aromatic=True))
            return
        raise SmilesError(f"unknown element token {ch!r}", pos)

    def _bracket_atom(self) -> None:
        open_off = self.pos
        end = self.text.find("]", self.pos)
        if end < 0:
            raise SmilesError("unmatched '['", open_off)
        body = self.text[self.pos + 1 : end]
        i = 0
        while i < len(body) and body[i].isdigit():  # isotope, ignored
            i += 1
        elem, aromatic, i = self._bracket_element(body, i, open_off)
        explicit_h = 0
        charge = 0
        while i < len(body):
            ch = body[i]
            if ch == "@":
                i += 1  # chirality, ignored
            elif ch == "H":
                i += 1
                digits = ""
                while i < len(body) and body[i].isdigit():
                    digits += body[i]
                    i += 1
                explicit_h = int(digits) if digits else 1
            elif ch in "+-":
                sign = 1 if ch == "+" else -1
                i += 1
                if i < len(body) and body[i] == ch:  # ++ / -- form
                    n = 1
                    while i < len(body) and body[i] == ch:
                        n += 1
                        i += 1
                    charge = sign * n
                else:
                    digits = ""
                    while i < len(body) and body[i].isdigit():
                        digits += body[i]
                        i += 1
                    charge = sign * (int(digits) if digits else 1)
            elif ch == ":":
                i += 1  # atom map, ignored
                while i < len(body) and body[i].isdigit():
                    i += 1
            else:
                raise SmilesError(f"unexpected {ch!r} in bracket atom", open_off + 1 + i)
        self.pos = end + 1
        self._add_atom(Atom(elem, charge=charge, aromatic=aromatic, explicit_h=explicit_h))

    def _bracket_element(self, body: str, i: int, open_off: int) -> tuple[str, bool, int]:
        if i >= len(body):
            raise SmilesError("empty bracket atom", open_off)
        two, one = body[i : i + 2], body[i : i + 1]
        if two in BRACKET_ELEMENTS:
            return two, False, i + 2
        if two.lower() == two and two in AROMATIC_BRACKET:
            return two.capitalize(), True, i + 2
        if one in BRACKET_ELEMENTS:
            return one, False, i + 1
        if one in AROMATIC_BRACKET:
            return one.upper(), True, i + 1
        raise SmilesError(f"unknown element token {one!r}", open_off + 1 + i)
