"""Single-sequence representation of one relation and its dependencies.

A relation is stored as one ordered sequence of attribute nodes.  Each node
carries the attribute's flags plus up to ``max_determiners`` determiner
slots, where a slot is the set of node ids forming one left-hand side that
determines this attribute.  Attribute list and dependency structure
therefore live in a single container; no separate dependency list exists.

Entry order is constrained: all key attributes first, then non-key
attributes that act as determiners, then everything else.  The order is
checked against the flags declared at insertion time, so callers that know
the dependencies up front (see ``normalizer.build_schema_list``) get a list
whose final flags also satisfy the ordering.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    CapacityExceeded,
    DeterminerSlotsExhausted,
    DuplicateAttribute,
    EntryOrderViolation,
    InvalidFd,
    InvalidName,
    LhsTooLarge,
    UnknownAttribute,
)

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class AttributeKind(Enum):
    ATOMIC = "atomic"
    MULTIVALUED = "multivalued"


@dataclass(frozen=True)
class Limits:
    """Configurable structural limits; defaults follow the node layout."""

    max_determiners: int = 4
    max_lhs: int = 4
    max_name_len: int = 100
    max_attributes: int = 9000


@dataclass(frozen=True)
class FunctionalDependency:
    """One dependency in singleton right-hand-side form: ``lhs -> rhs``."""

    lhs: frozenset[str]
    rhs: str

    def __post_init__(self) -> None:
        if not self.lhs:
            raise InvalidFd("left-hand side must not be empty")
        if self.rhs in self.lhs:
            raise InvalidFd(f"trivial dependency: {self.rhs!r} appears on both sides")

    @classmethod
    def of(cls, lhs, rhs: str) -> "FunctionalDependency":
        return cls(frozenset(lhs), rhs)

    def __repr__(self) -> str:
        left = ", ".join(sorted(self.lhs))
        return f"{{{left}}} -> {self.rhs}"


@dataclass
class AttributeNode:
    """One attribute of the relation, with its determiner slots.

    ``determiner_slots`` holds one frozenset of node ids per stored
    left-hand side, in insertion order.  Slot order carries no meaning;
    the slots of a node form a set of id-sets.
    """

    attribute_name: str
    attribute_type: AttributeKind
    is_determiner: bool
    node_id: int
    determiner_slots: list[frozenset[int]]
    is_key_attribute: bool


def create_node(
    name: str,
    kind: AttributeKind = AttributeKind.ATOMIC,
    *,
    is_key: bool = False,
    is_det: bool = False,
    node_id: int,
    max_name_len: int = 100,
) -> AttributeNode:
    """Build a detached node with empty determiner slots.

    Raises InvalidName for an empty, malformed, or over-long name.
    """
    if not name or not _IDENTIFIER.match(name):
        raise InvalidName(f"not a valid attribute name: {name!r}")
    if len(name) > max_name_len:
        raise InvalidName(f"attribute name longer than {max_name_len} characters: {name[:20]!r}...")
    return AttributeNode(
        attribute_name=name,
        attribute_type=kind,
        is_determiner=is_det,
        node_id=node_id,
        determiner_slots=[],
        is_key_attribute=is_key,
    )


def _entry_rank(is_key: bool, is_det: bool) -> int:
    # key attributes < non-key determiners < the rest
    if is_key:
        return 0
    return 1 if is_det else 2


@dataclass
class SchemaList:
    """Ordered attribute-node sequence for one relation.

    Mutable while the relation is being entered; treated as an immutable
    value afterwards.  The id counter lives inside the list, so distinct
    relations never share state.
    """

    relation_name: str
    nodes: list[AttributeNode] = field(default_factory=list)
    node_id_counter: int = 1
    limits: Limits = field(default_factory=Limits)

    def find_node(self, name: str) -> AttributeNode | None:
        for node in self.nodes:
            if node.attribute_name == name:
                return node
        return None

    def node_by_id(self, node_id: int) -> AttributeNode | None:
        for node in self.nodes:
            if node.node_id == node_id:
                return node
        return None

    def add_attribute(
        self,
        name: str,
        kind: AttributeKind = AttributeKind.ATOMIC,
        *,
        is_key: bool = False,
        is_det: bool = False,
    ) -> int:
        """Append one attribute at the tail and return its node id.

        The new node takes the current counter value as its id; the
        counter then advances by one.  The append is rejected when the
        declared flags would place the node before an earlier entry class.
        """
        if len(self.nodes) >= self.limits.max_attributes:
            raise CapacityExceeded(
                f"relation {self.relation_name!r} already holds {self.limits.max_attributes} attributes"
            )
        if self.find_node(name) is not None:
            raise DuplicateAttribute(f"attribute {name!r} already present in {self.relation_name!r}")
        if self.nodes:
            last = self.nodes[-1]
            if _entry_rank(is_key, is_det) < _entry_rank(last.is_key_attribute, last.is_determiner):
                raise EntryOrderViolation(
                    f"cannot append {name!r}: key attributes, then non-key determiners, "
                    "then remaining attributes"
                )
        node = create_node(
            name,
            kind,
            is_key=is_key,
            is_det=is_det,
            node_id=self.node_id_counter,
            max_name_len=self.limits.max_name_len,
        )
        self.nodes.append(node)
        self.node_id_counter += 1
        return node.node_id

    def add_fd(self, fd: FunctionalDependency) -> None:
        """Store one dependency into the dependent node's first free slot.

        Re-adding an identical dependency is a no-op.  A fifth distinct
        determiner for one attribute is rejected, as is a left-hand side
        wider than the configured limit.
        """
        target = self.find_node(fd.rhs)
        if target is None:
            raise UnknownAttribute(f"dependent attribute {fd.rhs!r} not in relation")
        if len(fd.lhs) > self.limits.max_lhs:
            raise LhsTooLarge(
                f"left-hand side of size {len(fd.lhs)} exceeds limit {self.limits.max_lhs}"
            )
        ids = []
        for name in fd.lhs:
            node = self.find_node(name)
            if node is None:
                raise UnknownAttribute(f"determiner attribute {name!r} not in relation")
            ids.append(node.node_id)
        slot = frozenset(ids)
        if slot in target.determiner_slots:
            return
        if len(target.determiner_slots) >= self.limits.max_determiners:
            raise DeterminerSlotsExhausted(
                f"attribute {fd.rhs!r} already has {self.limits.max_determiners} determiners"
            )
        target.determiner_slots.append(slot)
        for name in fd.lhs:
            node = self.find_node(name)
            assert node is not None
            node.is_determiner = True

    def stored_fds(self) -> list[FunctionalDependency]:
        """Reconstruct the dependencies held in the slots, in storage order."""
        by_id = {node.node_id: node.attribute_name for node in self.nodes}
        out: list[FunctionalDependency] = []
        for node in self.nodes:
            for slot in node.determiner_slots:
                out.append(
                    FunctionalDependency(frozenset(by_id[i] for i in slot), node.attribute_name)
                )
        return out

    def check_invariants(self, *, strict_order: bool = True) -> None:
        """Raise AssertionError if any structural invariant is broken.

        ``strict_order`` additionally checks the entry order against the
        final determiner flags; lists whose determiner flags were declared
        accurately at entry (the loader's lists) satisfy it.
        """
        names = [n.attribute_name for n in self.nodes]
        assert len(names) == len(set(names)), "duplicate attribute names"
        ids = [n.node_id for n in self.nodes]
        assert all(a < b for a, b in zip(ids, ids[1:])), "node ids not strictly increasing"
        assert len(self.nodes) <= self.limits.max_attributes
        id_set = set(ids)
        referenced: set[int] = set()
        for node in self.nodes:
            assert len(node.determiner_slots) <= self.limits.max_determiners
            assert len(set(node.determiner_slots)) == len(node.determiner_slots), "duplicate slots"
            for slot in node.determiner_slots:
                assert slot, "empty determiner slot"
                assert len(slot) <= self.limits.max_lhs
                assert slot <= id_set, "slot references a missing node"
                referenced |= slot
        for node in self.nodes:
            assert node.is_determiner == (node.node_id in referenced), (
                f"determiner flag inconsistent for {node.attribute_name!r}"
            )
        if strict_order:
            ranks = [_entry_rank(n.is_key_attribute, n.is_determiner) for n in self.nodes]
            assert all(a <= b for a, b in zip(ranks, ranks[1:])), "entry order violated"
