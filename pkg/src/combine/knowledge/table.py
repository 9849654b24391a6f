"""Rectangular data tables with kind-declared columns."""

from __future__ import annotations

from dataclasses import dataclass, field

from combine.knowledge.values import CELL_KINDS, CellValue, cell_problem


class TableError(ValueError):
    """Malformed table; carries the full list of problems."""

    def __init__(self, problems: list[str]):
        super().__init__("; ".join(problems))
        self.problems = problems


@dataclass(frozen=True)
class Column:
    name: str
    kind: str


@dataclass
class DataTable:
    columns: list[Column] = field(default_factory=list)
    rows: list[list[CellValue]] = field(default_factory=list)

    def problems(self) -> list[str]:
        """All structural problems: shape, duplicate names, cell kinds."""
        out = []
        seen = set()
        for column in self.columns:
            if column.kind not in CELL_KINDS:
                out.append(f"column {column.name!r}: unknown kind {column.kind!r}")
            if column.name in seen:
                out.append(f"duplicate column name {column.name!r}")
            seen.add(column.name)
        width = len(self.columns)
        for ri, row in enumerate(self.rows):
            if len(row) != width:
                out.append(f"row {ri}: length {len(row)} != column count {width}")
                continue
            for ci, cell in enumerate(row):
                problem = cell_problem(cell, self.columns[ci].kind)
                if problem:
                    out.append(f"row {ri}, column {self.columns[ci].name!r}: {problem}")
        return out

    def check(self) -> "DataTable":
        problems = self.problems()
        if problems:
            raise TableError(problems)
        return self

    def column_index(self, name: str) -> int:
        for i, column in enumerate(self.columns):
            if column.name == name:
                return i
        raise KeyError(name)

    def columns_of_kind(self, kind: str) -> list[int]:
        return [i for i, c in enumerate(self.columns) if c.kind == kind]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.columns))
