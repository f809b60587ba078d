"""Decomposition-quality oracles, independent of the synthesis path.

Lossless join is decided by the chase: one tableau row per table, rows
equated under the dependencies until either some row becomes fully
distinguished or nothing changes.  Dependency preservation projects the
dependencies onto each table exactly, by closing every subset of the
table's attributes; no heuristic projection is used, so the verdicts here
are trustworthy for auditing the normalizer.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Sequence

from .errors import AttributeOutsideUniverse
from .fd_engine import FdSet, closure
from .normalizer import TableStructure


class ViolationKind(Enum):
    PARTIAL = "partial"
    TRANSITIVE = "transitive"


@dataclass(frozen=True)
class Violation:
    table: str
    kind: ViolationKind
    dependent: str
    determiner: frozenset[str]


def _check_within_universe(tables: Sequence[TableStructure], universe: Sequence[str]) -> None:
    known = set(universe)
    for table in tables:
        outside = set(table.attributes) - known
        if outside:
            raise AttributeOutsideUniverse(
                f"table {table.name!r} mentions attributes outside the universe: {sorted(outside)}"
            )


def is_lossless(
    universe: Sequence[str], fds: FdSet, tables: Sequence[TableStructure]
) -> bool:
    """Chase test for the lossless-join property.

    Builds one row per table with distinguished symbols on the table's own
    attributes, chases to a fixpoint, and reports whether some row became
    distinguished everywhere.
    """
    _check_within_universe(tables, universe)
    columns = list(universe)
    rows: list[dict[str, tuple]] = []
    for i, table in enumerate(tables):
        owned = set(table.attributes)
        rows.append(
            {a: ("d", a) if a in owned else ("n", i, a) for a in columns}
        )
    # Every productive pass merges at least one symbol pair, so the pass
    # count is bounded by the number of subscripted symbols.
    max_passes = len(tables) * len(columns) * max(1, len(fds)) + 2
    passes = 0
    changed = True
    while changed:
        changed = False
        passes += 1
        if passes > max_passes:
            raise RuntimeError("chase failed to reach a fixpoint within its bound")
        for fd in fds:
            lhs = sorted(fd.lhs)
            groups: dict[tuple, list[dict[str, tuple]]] = {}
            for row in rows:
                groups.setdefault(tuple(row[a] for a in lhs), []).append(row)
            for members in groups.values():
                if len(members) < 2:
                    continue
                symbols = {row[fd.rhs] for row in members}
                if len(symbols) == 1:
                    continue
                distinguished = ("d", fd.rhs)
                target = distinguished if distinguished in symbols else members[0][fd.rhs]
                for row in rows:
                    if row[fd.rhs] in symbols and row[fd.rhs] != target:
                        row[fd.rhs] = target
                        changed = True
    return any(all(row[a] == ("d", a) for a in columns) for row in rows)


def _project(fds: FdSet, attributes: Sequence[str]) -> list[tuple[frozenset[str], str]]:
    # Exact projection: close every non-empty subset of the table's
    # attributes and keep what stays inside the table.
    attrs = list(dict.fromkeys(attributes))
    projected: list[tuple[frozenset[str], str]] = []
    for size in range(1, len(attrs) + 1):
        for combo in combinations(attrs, size):
            left = frozenset(combo)
            reach = closure(left, fds)
            for rhs in attrs:
                if rhs in reach and rhs not in left:
                    projected.append((left, rhs))
    return projected


def preserves_dependencies(fds: FdSet, tables: Sequence[TableStructure]) -> bool:
    """True iff every dependency follows from the per-table projections."""
    _check_within_universe(tables, fds.universe)
    projected: list[tuple[frozenset[str], str]] = []
    for table in tables:
        projected.extend(_project(fds, table.attributes))

    def derivable(seed: frozenset[str]) -> set[str]:
        reach = set(seed)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in projected:
                if rhs not in reach and lhs <= reach:
                    reach.add(rhs)
                    changed = True
        return reach

    return all(fd.rhs in derivable(fd.lhs) for fd in fds)


def scan_violations(
    table: TableStructure, fds: FdSet, mode: str = "3nf"
) -> list[Violation]:
    """Scan one table for partial (and, in ``3nf`` mode, transitive)
    dependencies against its declared primary key.

    A partial violation is a non-key attribute determined by a proper
    subset of the key; a transitive violation is a non-key attribute
    determined, inside the table, by a set that is not contained in the
    key and touches a non-key attribute.
    """
    if mode not in ("2nf", "3nf"):
        raise ValueError(f"mode must be '2nf' or '3nf', got {mode!r}")
    pk = set(table.primary_key)
    attrs = set(table.attributes)
    found: list[Violation] = []
    for fd in fds:
        if fd.rhs not in attrs or fd.rhs in pk:
            continue
        if fd.lhs < pk:
            found.append(Violation(table.name, ViolationKind.PARTIAL, fd.rhs, fd.lhs))
        elif (
            mode == "3nf"
            and fd.lhs <= attrs
            and not fd.lhs <= pk
            and fd.lhs & (attrs - pk)
        ):
            found.append(Violation(table.name, ViolationKind.TRANSITIVE, fd.rhs, fd.lhs))
    return found
