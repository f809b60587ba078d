"""SQL DDL rendering for synthesized table structures.

Columns carry no type information upstream, so every column is emitted as
``VARCHAR(255)``.  Statements are ordered so that every referenced table is
created before its referencer; ties keep input order.  Output is
byte-deterministic for a given input.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import CyclicReference, DanglingForeignKey
from .normalizer import TableStructure


@dataclass(frozen=True)
class DdlScript:
    statements: tuple[str, ...]

    @property
    def text(self) -> str:
        if not self.statements:
            return ""
        return "\n\n".join(self.statements) + "\n"


def _render(table: TableStructure, by_name: dict[str, TableStructure]) -> str:
    lines = [f"CREATE TABLE {table.name} ("]
    body = [f"    {column} VARCHAR(255)" for column in table.attributes]
    body.append(f"    PRIMARY KEY ({', '.join(table.primary_key)})")
    for fk in table.foreign_keys:
        referenced = by_name[fk.references]
        body.append(
            f"    FOREIGN KEY ({', '.join(fk.columns)}) "
            f"REFERENCES {fk.references} ({', '.join(referenced.primary_key)})"
        )
    lines.append(",\n".join(body))
    lines.append(");")
    return "\n".join(lines)


def emit_ddl(tables: Sequence[TableStructure]) -> DdlScript:
    """Render one CREATE TABLE statement per table, referenced-first."""
    by_name = {t.name: t for t in tables}
    for table in tables:
        for fk in table.foreign_keys:
            if fk.references not in by_name:
                raise DanglingForeignKey(
                    f"table {table.name!r} references unknown table {fk.references!r}"
                )
    emitted: list[TableStructure] = []
    done: set[str] = set()
    remaining = list(tables)
    while remaining:
        ready = [
            t for t in remaining
            if all(fk.references in done for fk in t.foreign_keys)
        ]
        if not ready:
            names = ", ".join(t.name for t in remaining)
            raise CyclicReference(f"foreign keys form a cycle among: {names}")
        for table in ready:
            emitted.append(table)
            done.add(table.name)
        remaining = [t for t in remaining if t not in ready]
    return DdlScript(tuple(_render(t, by_name) for t in emitted))
