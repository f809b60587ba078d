"""Line-oriented schema documents.

Grammar ('#' starts a comment, blank lines ignored):

    relation <Name>                          exactly once, first declaration
    attr <name> [key] [multivalued] [composite(<n1>, <n2>, ...)]
    fd <a>[, <b> ...] -> <c>[, <d> ...]

Identifiers match ``[A-Za-z_][A-Za-z0-9_]*``.  Key attributes may appear
anywhere in the file; the normalizer orders entries before building the
node sequence.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DuplicateAttribute, SchemaSyntaxError, UnknownAttributeInFd
from .fd_engine import RawFd
from .normalizer import RawAttribute, RawKind, RawSchema

_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_COMPOSITE = re.compile(r"composite\(([^()]*)\)")


@dataclass(frozen=True)
class SchemaDocument:
    source: str
    schema: RawSchema


def _require_identifier(lineno: int, token: str, what: str) -> str:
    if not _IDENTIFIER.match(token):
        raise SchemaSyntaxError(lineno, f"invalid {what}: {token!r}")
    return token


def _parse_attr(lineno: int, rest: str) -> RawAttribute:
    components: tuple[str, ...] = ()
    match = _COMPOSITE.search(rest)
    if match:
        parts = [p.strip() for p in match.group(1).split(",")]
        parts = [p for p in parts if p]
        if not parts:
            raise SchemaSyntaxError(lineno, "composite(...) needs at least one component")
        components = tuple(_require_identifier(lineno, p, "component name") for p in parts)
        rest = rest[: match.start()] + rest[match.end():]
    tokens = rest.split()
    if not tokens:
        raise SchemaSyntaxError(lineno, "attr needs a name")
    name = _require_identifier(lineno, tokens[0], "attribute name")
    is_key = False
    multivalued = False
    for flag in tokens[1:]:
        if flag == "key":
            is_key = True
        elif flag == "multivalued":
            multivalued = True
        else:
            raise SchemaSyntaxError(lineno, f"unknown attribute flag {flag!r}")
    if multivalued and components:
        raise SchemaSyntaxError(lineno, "an attribute cannot be both multivalued and composite")
    if components:
        kind = RawKind.COMPOSITE
    elif multivalued:
        kind = RawKind.MULTIVALUED
    else:
        kind = RawKind.ATOMIC
    return RawAttribute(name, is_key, kind, components)


def _parse_name_list(lineno: int, text: str, what: str) -> tuple[str, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(not p for p in parts):
        raise SchemaSyntaxError(lineno, f"malformed {what} list: {text.strip()!r}")
    names: list[str] = []
    for part in parts:
        _require_identifier(lineno, part, f"{what} attribute")
        if part not in names:
            names.append(part)
    return tuple(names)


def parse_schema_file(text: str) -> RawSchema:
    """Parse one schema document into a raw relation."""
    relation: str | None = None
    attributes: list[RawAttribute] = []
    declared: set[str] = set()
    fd_entries: list[tuple[int, RawFd]] = []
    last_line = 0
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        last_line = lineno
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if relation is None:
            if head != "relation":
                raise SchemaSyntaxError(lineno, "expected 'relation <name>' as the first declaration")
            name = rest.strip()
            relation = _require_identifier(lineno, name, "relation name")
            continue
        if head == "relation":
            raise SchemaSyntaxError(lineno, "relation already declared")
        if head == "attr":
            attr = _parse_attr(lineno, rest)
            if attr.name in declared:
                raise DuplicateAttribute(f"line {lineno}: attribute {attr.name!r} declared twice")
            attributes.append(attr)
            declared.add(attr.name)
        elif head == "fd":
            if "->" not in rest:
                raise SchemaSyntaxError(lineno, "fd needs '<lhs> -> <rhs>'")
            left, _, right = rest.partition("->")
            lhs = _parse_name_list(lineno, left, "left-hand")
            rhs = _parse_name_list(lineno, right, "right-hand")
            fd_entries.append((lineno, RawFd(lhs, rhs)))
        else:
            raise SchemaSyntaxError(lineno, f"unknown directive {head!r}")
    if relation is None:
        raise SchemaSyntaxError(last_line or 1, "no relation declared")
    known = set(declared)
    for attr in attributes:
        known.update(attr.components)
    for lineno, fd in fd_entries:
        for name in (*fd.lhs, *fd.rhs):
            if name not in known:
                raise UnknownAttributeInFd(f"line {lineno}: undeclared attribute {name!r}")
    return RawSchema(relation, tuple(attributes), tuple(fd for _, fd in fd_entries))


def parse_document(text: str) -> SchemaDocument:
    return SchemaDocument(source=text, schema=parse_schema_file(text))


def format_schema(schema: RawSchema) -> str:
    """Serialize a raw relation back into the line grammar."""
    lines = [f"relation {schema.relation_name}"]
    for attr in schema.attributes:
        parts = ["attr", attr.name]
        if attr.is_key:
            parts.append("key")
        if attr.kind is RawKind.MULTIVALUED:
            parts.append("multivalued")
        if attr.kind is RawKind.COMPOSITE:
            parts.append(f"composite({', '.join(attr.components)})")
        lines.append(" ".join(parts))
    for fd in schema.declared_fds:
        lines.append(f"fd {', '.join(fd.lhs)} -> {', '.join(fd.rhs)}")
    return "\n".join(lines) + "\n"
