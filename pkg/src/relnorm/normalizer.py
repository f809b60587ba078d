"""First-normal-form flattening, dependency classification, table synthesis.

The pipeline runs: flatten composite/multivalued attributes, split declared
dependencies to singleton right-hand sides, compute a canonical cover,
enter everything into a :class:`~relnorm.schema_model.SchemaList`, classify
each stored determiner slot as full / partial / transitive against the
declared key, and assemble second- or third-normal-form table structures
from the classification buckets.

Classification is per slot: an attribute with several determiners
contributes to several buckets.  A slot equal to the key id-set is a full
dependency; a proper subset of the key is partial; anything else (any
non-key id present) is transitive.  Key attributes are never classified as
dependents; dependencies onto them stay in the cover, where they influence
redundancy elimination, but produce no tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .errors import ComponentCollision, DuplicateAttribute, NoKeyDeclared, UnknownAttributeInFd
from .fd_engine import FdSet, RawFd, minimal_cover, split_rhs
from .schema_model import AttributeKind, Limits, SchemaList


class RawKind(Enum):
    ATOMIC = "atomic"
    MULTIVALUED = "multivalued"
    COMPOSITE = "composite"


@dataclass(frozen=True)
class RawAttribute:
    name: str
    is_key: bool = False
    kind: RawKind = RawKind.ATOMIC
    components: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if (self.kind is RawKind.COMPOSITE) != bool(self.components):
            raise ValueError("components are required exactly for composite attributes")


@dataclass(frozen=True)
class RawSchema:
    """A relation as declared: attributes with kinds plus raw dependencies."""

    relation_name: str
    attributes: tuple[RawAttribute, ...]
    declared_fds: tuple[RawFd, ...] = ()

    def __post_init__(self) -> None:
        names = [a.name for a in self.attributes]
        if len(names) != len(set(names)):
            raise DuplicateAttribute(f"duplicate attribute names in {self.relation_name!r}")
        if not any(a.is_key for a in self.attributes):
            raise NoKeyDeclared(f"relation {self.relation_name!r} declares no key attribute")
        components: list[str] = []
        for a in self.attributes:
            components.extend(a.components)
        if len(components) != len(set(components)) or set(components) & set(names):
            raise ComponentCollision("component names must be unique and distinct from attributes")
        known = set(names) | set(components)
        for fd in self.declared_fds:
            for name in (*fd.lhs, *fd.rhs):
                if name not in known:
                    raise UnknownAttributeInFd(f"dependency mentions undeclared attribute {name!r}")

    def attribute_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes)

    def key_names(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.attributes if a.is_key)


def to_first_normal_form(raw: RawSchema) -> RawSchema:
    """Flatten to atomic attributes.

    Composite attributes are replaced in place by their components, which
    inherit the key flag.  Multivalued attributes become ``<name>_ID`` and
    atomic.  Dependencies follow the rewriting: a composite mentioned in a
    dependency is replaced by all of its components on either side.
    """
    replacement: dict[str, tuple[str, ...]] = {}
    flat: list[RawAttribute] = []
    for a in raw.attributes:
        if a.kind is RawKind.COMPOSITE:
            for comp in a.components:
                flat.append(RawAttribute(comp, a.is_key))
            replacement[a.name] = a.components
        elif a.kind is RawKind.MULTIVALUED:
            renamed = f"{a.name}_ID"
            flat.append(RawAttribute(renamed, a.is_key))
            replacement[a.name] = (renamed,)
        else:
            flat.append(a)
            replacement[a.name] = (a.name,)
    final_names = [a.name for a in flat]
    if len(final_names) != len(set(final_names)):
        dupes = sorted({n for n in final_names if final_names.count(n) > 1})
        raise ComponentCollision(f"flattening produced duplicate attribute names: {dupes}")

    def expand(names: tuple[str, ...]) -> tuple[str, ...]:
        out: list[str] = []
        for name in names:
            for repl in replacement.get(name, (name,)):
                if repl not in out:
                    out.append(repl)
        return tuple(out)

    rewritten = tuple(RawFd(expand(fd.lhs), expand(fd.rhs)) for fd in raw.declared_fds)
    return RawSchema(raw.relation_name, tuple(flat), rewritten)


@dataclass(frozen=True)
class DependencyGroup:
    """One determiner with every dependent attribute it was stored for."""

    determiner: tuple[str, ...]
    dependents: tuple[str, ...]


@dataclass(frozen=True)
class Classification:
    """The full / partial / transitive buckets for one relation.

    ``a1`` lists the key attributes followed by every attribute that
    depends on exactly the whole key (or on nothing).  ``a2`` and ``a3``
    group partial and transitive dependents under their determiners, one
    group per distinct determiner, in first-seen order.  ``all_attributes``
    lists the attributes outside the key, in entry order.
    """

    relation_name: str
    a1: tuple[str, ...]
    a2: tuple[DependencyGroup, ...]
    a3: tuple[DependencyGroup, ...]
    prime_attributes: tuple[str, ...]
    prime_key_node_ids: frozenset[int]
    all_attributes: tuple[str, ...]


@dataclass(frozen=True)
class ForeignKey:
    columns: tuple[str, ...]
    references: str


@dataclass
class TableStructure:
    """A synthesized table: attribute list, primary key, foreign keys."""

    name: str
    attributes: list[str]
    primary_key: list[str]
    foreign_keys: list[ForeignKey] = field(default_factory=list)

    def attribute_set(self) -> frozenset[str]:
        return frozenset(self.attributes)

    def key_set(self) -> frozenset[str]:
        return frozenset(self.primary_key)


def attribute_info(schema_list: SchemaList) -> tuple[tuple[str, ...], tuple[str, ...], frozenset[int]]:
    """Partition node names by key membership, preserving list order.

    Returns ``(all_attributes, prime_attributes, prime_key_node_ids)``
    where ``all_attributes`` holds the names outside the key.
    """
    primes: list[str] = []
    others: list[str] = []
    ids: set[int] = set()
    for node in schema_list.nodes:
        if node.is_key_attribute:
            primes.append(node.attribute_name)
            ids.add(node.node_id)
        else:
            others.append(node.attribute_name)
    if not primes:
        raise NoKeyDeclared(f"relation {schema_list.relation_name!r} has no key attribute")
    return tuple(others), tuple(primes), frozenset(ids)


def classify(schema_list: SchemaList) -> Classification:
    """Bucket every stored determiner slot of every non-key attribute.

    Expects the list to hold a canonical cover.  Slots equal to the key
    id-set feed ``a1``; proper subsets feed ``a2``; all other slots feed
    ``a3``.  Slot-less attributes also land in ``a1``.  Groups merge on
    determiner equality and keep creation order; dependents keep traversal
    order.
    """
    non_key, primes, prime_ids = attribute_info(schema_list)
    by_id = {node.node_id: node.attribute_name for node in schema_list.nodes}

    a1: list[str] = list(primes)
    a2: list[tuple[frozenset[int], list[str]]] = []
    a3: list[tuple[frozenset[int], list[str]]] = []

    def file_into(groups: list[tuple[frozenset[int], list[str]]], slot: frozenset[int], name: str) -> None:
        for det, dependents in groups:
            if det == slot:
                if name not in dependents:
                    dependents.append(name)
                return
        groups.append((slot, [name]))

    for node in schema_list.nodes:
        if node.is_key_attribute:
            continue
        if not node.determiner_slots:
            a1.append(node.attribute_name)
            continue
        for slot in node.determiner_slots:
            if slot == prime_ids:
                a1.append(node.attribute_name)
            elif slot < prime_ids:
                file_into(a2, slot, node.attribute_name)
            else:
                file_into(a3, slot, node.attribute_name)

    def freeze(groups: list[tuple[frozenset[int], list[str]]]) -> tuple[DependencyGroup, ...]:
        return tuple(
            DependencyGroup(tuple(by_id[i] for i in sorted(det)), tuple(deps))
            for det, deps in groups
        )

    return Classification(
        relation_name=schema_list.relation_name,
        a1=tuple(a1),
        a2=freeze(a2),
        a3=freeze(a3),
        prime_attributes=primes,
        prime_key_node_ids=prime_ids,
        all_attributes=non_key,
    )


def _extend_unique(target: list[str], names) -> None:
    for name in names:
        if name not in target:
            target.append(name)


def _unique_names(tables: list[TableStructure]) -> None:
    seen: set[str] = set()
    for table in tables:
        name = table.name
        suffix = 2
        while name in seen:
            name = f"{table.name}_{suffix}"
            suffix += 1
        table.name = name
        seen.add(name)


def _base_tables(c: Classification) -> list[TableStructure]:
    main = TableStructure(
        name=f"{c.relation_name}_main",
        attributes=[],
        primary_key=list(c.prime_attributes),
    )
    _extend_unique(main.attributes, c.a1)
    tables = [main]
    for group in c.a2:
        table = TableStructure(
            name="_".join(group.determiner),
            attributes=list(group.determiner),
            primary_key=list(group.determiner),
        )
        _extend_unique(table.attributes, group.dependents)
        tables.append(table)
    return tables


def decompose_2nf(c: Classification) -> list[TableStructure]:
    """Second-normal-form synthesis.

    The main table carries the key plus all full dependents; one table per
    partial-dependency group.  Transitive groups are then attached to the
    earliest-built table containing their whole determiner, iterating to a
    fixpoint; groups whose determiner appears nowhere fall back into the
    main table together with their determiner attributes.
    """
    tables = _base_tables(c)
    main = tables[0]
    pending = list(c.a3)
    changed = True
    while changed and pending:
        changed = False
        for group in list(pending):
            det = set(group.determiner)
            hosts = [t for t in tables if det <= set(t.attributes)]
            if hosts:
                _extend_unique(hosts[0].attributes, group.dependents)
                pending.remove(group)
                changed = True
    for group in pending:
        _extend_unique(main.attributes, group.determiner)
        _extend_unique(main.attributes, group.dependents)
    _unique_names(tables)
    return tables


def decompose_3nf(c: Classification) -> list[TableStructure]:
    """Third-normal-form synthesis.

    The main table carries the key plus full dependents; one table per
    partial group; one table per transitive group, keyed by its
    determiner.  Each transitive table is then linked by a foreign key
    recorded on the earliest other table containing its determiner; when
    no such table exists, the determiner attributes are appended to the
    main table and the foreign key is recorded there.
    """
    tables = _base_tables(c)
    main = tables[0]
    transitive: list[TableStructure] = []
    for group in c.a3:
        table = TableStructure(
            name="_".join(group.determiner),
            attributes=list(group.determiner),
            primary_key=list(group.determiner),
        )
        _extend_unique(table.attributes, group.dependents)
        tables.append(table)
        transitive.append(table)
    _unique_names(tables)
    for table in transitive:
        det = set(table.primary_key)
        hosts = [t for t in tables if t is not table and det <= set(t.attributes)]
        if hosts:
            hosts[0].foreign_keys.append(ForeignKey(tuple(table.primary_key), table.name))
        else:
            _extend_unique(main.attributes, table.primary_key)
            main.foreign_keys.append(ForeignKey(tuple(table.primary_key), table.name))
    return tables


def build_schema_list(flat: RawSchema, cover: FdSet, limits: Limits | None = None) -> SchemaList:
    """Enter a flattened relation and its cover into a fresh node sequence.

    Attributes are ordered into the required classes automatically: key
    attributes, then non-key attributes acting as determiners in the
    cover, then the rest, each class stable in declared order.
    """
    determiner_names: set[str] = set()
    for fd in cover:
        determiner_names |= fd.lhs
    keys = [a for a in flat.attributes if a.is_key]
    dets = [a for a in flat.attributes if not a.is_key and a.name in determiner_names]
    rest = [a for a in flat.attributes if not a.is_key and a.name not in determiner_names]
    schema_list = SchemaList(flat.relation_name, limits=limits or Limits())
    for attr in (*keys, *dets, *rest):
        schema_list.add_attribute(
            attr.name,
            AttributeKind.ATOMIC,
            is_key=attr.is_key,
            is_det=attr.name in determiner_names,
        )
    for fd in cover:
        schema_list.add_fd(fd)
    return schema_list


@dataclass(frozen=True)
class PipelineState:
    """Intermediate products of one normalization run."""

    flat: RawSchema
    split: FdSet
    cover: FdSet
    schema_list: SchemaList
    classification: Classification


def prepare(raw: RawSchema, limits: Limits | None = None) -> PipelineState:
    """Run every stage up to (and including) classification.

    Before the cover is computed, the split dependencies are stably
    reordered so that dependencies whose left-hand side contains a
    non-key attribute are examined for redundancy first; this keeps the
    key-rooted dependencies in the cover whenever a choice exists.
    """
    flat = to_first_normal_form(raw)
    universe = flat.attribute_names()
    split = split_rhs(flat.declared_fds, universe)
    primes = set(flat.key_names())
    prioritized = [fd for fd in split if not fd.lhs <= primes]
    prioritized += [fd for fd in split if fd.lhs <= primes]
    cover = minimal_cover(FdSet(tuple(prioritized), universe))
    schema_list = build_schema_list(flat, cover, limits)
    classification = classify(schema_list)
    return PipelineState(
        flat=flat,
        split=split,
        cover=cover,
        schema_list=schema_list,
        classification=classification,
    )


def normalize(raw: RawSchema, *, to_3nf: bool, limits: Limits | None = None) -> list[TableStructure]:
    """Full pipeline: flatten, cover, classify, decompose."""
    state = prepare(raw, limits)
    if to_3nf:
        return decompose_3nf(state.classification)
    return decompose_2nf(state.classification)
