import pytest

from relnorm import corpus
from relnorm.errors import (
    DuplicateAttribute,
    NoKeyDeclared,
    SchemaSyntaxError,
    UnknownAttributeInFd,
)
from relnorm.fd_engine import RawFd
from relnorm.normalizer import RawKind
from relnorm.schema_file import format_schema, parse_document, parse_schema_file

EMPLOYEE_DOC = """\
# employees with job classes
relation Employee
attr e_id key
attr e_s_name
attr j_class
attr CHPH
fd e_id -> e_s_name, j_class, CHPH
fd j_class -> CHPH
"""


class TestParse:
    def test_employee_document(self):
        schema = parse_schema_file(EMPLOYEE_DOC)
        assert schema.relation_name == "Employee"
        assert len(schema.attributes) == 4
        assert len(schema.declared_fds) == 2
        assert schema.key_names() == ("e_id",)
        assert schema.declared_fds[0] == RawFd(("e_id",), ("e_s_name", "j_class", "CHPH"))

    def test_comments_only(self):
        with pytest.raises(SchemaSyntaxError, match="no relation declared"):
            parse_schema_file("# nothing here\n# still nothing\n")

    def test_undeclared_fd_attribute(self):
        doc = "relation R\nattr y key\nfd x -> y\n"
        with pytest.raises(UnknownAttributeInFd):
            parse_schema_file(doc)

    def test_duplicate_attribute(self):
        doc = "relation R\nattr a key\nattr a\n"
        with pytest.raises(DuplicateAttribute):
            parse_schema_file(doc)

    def test_missing_key(self):
        with pytest.raises(NoKeyDeclared):
            parse_schema_file("relation R\nattr a\n")

    def test_double_relation(self):
        with pytest.raises(SchemaSyntaxError, match="already declared"):
            parse_schema_file("relation R\nrelation S\n")

    def test_unknown_directive(self):
        with pytest.raises(SchemaSyntaxError, match="unknown directive"):
            parse_schema_file("relation R\ntable a\n")

    def test_bad_identifier(self):
        with pytest.raises(SchemaSyntaxError):
            parse_schema_file("relation R\nattr 1bad key\n")

    def test_error_carries_line_number(self):
        try:
            parse_schema_file("relation R\nattr a key\nfd a ->\n")
        except SchemaSyntaxError as exc:
            assert exc.line == 3
        else:
            pytest.fail("expected a syntax error")

    def test_multivalued_and_composite_flags(self):
        doc = (
            "relation R\n"
            "attr k key\n"
            "attr phones multivalued\n"
            "attr name composite(first, last)\n"
            "fd k -> name\n"
        )
        schema = parse_schema_file(doc)
        kinds = {a.name: a.kind for a in schema.attributes}
        assert kinds["phones"] is RawKind.MULTIVALUED
        assert kinds["name"] is RawKind.COMPOSITE
        assert schema.attributes[2].components == ("first", "last")

    def test_fd_may_reference_components(self):
        doc = "relation R\nattr k key\nattr name composite(first, last)\nfd first -> last\n"
        schema = parse_schema_file(doc)
        assert schema.declared_fds == (RawFd(("first",), ("last",)),)


class TestRoundTrip:
    def test_parse_format_parse(self):
        first = parse_schema_file(EMPLOYEE_DOC)
        second = parse_schema_file(format_schema(first))
        assert first == second

    def test_round_trip_over_corpus(self):
        for name in corpus.corpus_names():
            schema = corpus.load(name)
            assert parse_schema_file(format_schema(schema)) == schema

    def test_document_keeps_source(self):
        doc = parse_document(EMPLOYEE_DOC)
        assert doc.source == EMPLOYEE_DOC
        assert doc.schema.relation_name == "Employee"


class TestCorpusFixtures:
    # declared attribute / split-dependency counts per source table
    EXPECTED = {
        "Beer_Relation": (7, 5),
        "GH_Relation": (12, 13),
        "ClientRental": (9, 17),
        "AB_Relation": (8, 16),
        "Invoice": (10, 10),
        "Emp": (10, 8),
        "Project": (9, 8),
        "WellmeadowsHospital": (13, 10),
        "StaffPropertyInspection": (8, 16),
        "Report": (8, 6),
    }

    def test_counts_match_source_table(self):
        from relnorm.fd_engine import split_rhs

        for name, (n_attrs, n_fds) in self.EXPECTED.items():
            schema = corpus.load(name)
            assert len(schema.attributes) == n_attrs, name
            split = split_rhs(schema.declared_fds, schema.attribute_names())
            assert len(split) == n_fds, name

    def test_corpus_names_are_stable(self):
        assert corpus.corpus_names() == tuple(self.EXPECTED)
