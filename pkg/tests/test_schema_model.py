import pytest

from relnorm.errors import (
    DeterminerSlotsExhausted,
    DuplicateAttribute,
    EntryOrderViolation,
    InvalidFd,
    InvalidName,
    LhsTooLarge,
    UnknownAttribute,
)
from relnorm.schema_model import (
    AttributeKind,
    FunctionalDependency,
    Limits,
    SchemaList,
    create_node,
)

FD = FunctionalDependency.of


def employee_list_in_source_order() -> SchemaList:
    # e_id, e_s_name, j_class, CHPH entered as declared; determiner flags
    # start false for the non-keys and are set by the dependency adds.
    sl = SchemaList("Employee")
    sl.add_attribute("e_id", is_key=True, is_det=True)
    sl.add_attribute("e_s_name")
    sl.add_attribute("j_class")
    sl.add_attribute("CHPH")
    return sl


class TestCreateNode:
    def test_first_key_node(self):
        node = create_node("e_id", AttributeKind.ATOMIC, is_key=True, is_det=True, node_id=1)
        assert node.attribute_name == "e_id"
        assert node.attribute_type is AttributeKind.ATOMIC
        assert node.is_determiner is True
        assert node.node_id == 1
        assert node.determiner_slots == []
        assert node.is_key_attribute is True

    def test_plain_node_defaults(self):
        node = create_node("x", node_id=5)
        assert node.is_key_attribute is False
        assert node.is_determiner is False
        assert node.determiner_slots == []

    def test_name_too_long(self):
        with pytest.raises(InvalidName):
            create_node("a" * 101, node_id=1)
        # exactly at the limit is fine
        create_node("a" * 100, node_id=1)

    @pytest.mark.parametrize("bad", ["", "1abc", "a-b", "a b", "a.b"])
    def test_illegal_names(self, bad):
        with pytest.raises(InvalidName):
            create_node(bad, node_id=1)


class TestAddAttribute:
    def test_ids_run_from_one(self):
        sl = SchemaList("R")
        sl.add_attribute("a", is_key=True)
        sl.add_attribute("b", is_key=True)
        for name in "cdefg":
            sl.add_attribute(name)
        assert [n.node_id for n in sl.nodes] == [1, 2, 3, 4, 5, 6, 7]
        assert sl.node_id_counter == 8

    def test_append_to_empty_list(self):
        sl = SchemaList("R")
        sl.add_attribute("head", is_key=True)
        assert sl.nodes[0].attribute_name == "head"

    def test_key_after_non_key_rejected(self):
        sl = SchemaList("R")
        sl.add_attribute("k", is_key=True)
        sl.add_attribute("x")
        with pytest.raises(EntryOrderViolation):
            sl.add_attribute("k2", is_key=True)

    def test_determiner_after_plain_rejected(self):
        sl = SchemaList("R")
        sl.add_attribute("k", is_key=True)
        sl.add_attribute("plain")
        with pytest.raises(EntryOrderViolation):
            sl.add_attribute("det", is_det=True)

    def test_duplicate_name_rejected(self):
        sl = SchemaList("R")
        sl.add_attribute("a", is_key=True)
        with pytest.raises(DuplicateAttribute):
            sl.add_attribute("a")

    def test_capacity(self):
        sl = SchemaList("R", limits=Limits(max_attributes=2))
        sl.add_attribute("a", is_key=True)
        sl.add_attribute("b")
        from relnorm.errors import CapacityExceeded

        with pytest.raises(CapacityExceeded):
            sl.add_attribute("c")


class TestAddFd:
    def test_multi_determiner_slots(self):
        # A..G as determiners of H, ids starting at 100.
        sl = SchemaList("demo", node_id_counter=100)
        for name in "ABCDEFG":
            sl.add_attribute(name, is_det=True)
        sl.add_attribute("H")
        sl.add_fd(FD("ABCD", "H"))
        sl.add_fd(FD("EF", "H"))
        sl.add_fd(FD("G", "H"))
        h = sl.find_node("H")
        assert h.determiner_slots == [
            frozenset({100, 101, 102, 103}),
            frozenset({104, 105}),
            frozenset({106}),
        ]

    def test_employee_first_fd(self):
        sl = employee_list_in_source_order()
        sl.add_fd(FD(["e_id"], "e_s_name"))
        assert sl.find_node("e_s_name").determiner_slots == [frozenset({1})]

    def test_employee_all_fds(self):
        sl = employee_list_in_source_order()
        for rhs in ("e_s_name", "j_class", "CHPH"):
            sl.add_fd(FD(["e_id"], rhs))
        sl.add_fd(FD(["j_class"], "CHPH"))
        assert sl.find_node("CHPH").determiner_slots == [frozenset({1}), frozenset({3})]
        assert sl.find_node("j_class").is_determiner is True

    def test_fifth_determiner_rejected(self):
        sl = SchemaList("R")
        for name in "abcde":
            sl.add_attribute(name, is_det=True)
        sl.add_attribute("z")
        for name in "abcd":
            sl.add_fd(FD([name], "z"))
        with pytest.raises(DeterminerSlotsExhausted):
            sl.add_fd(FD(["e"], "z"))

    def test_duplicate_fd_is_noop(self):
        sl = employee_list_in_source_order()
        sl.add_fd(FD(["e_id"], "e_s_name"))
        sl.add_fd(FD(["e_id"], "e_s_name"))
        assert sl.find_node("e_s_name").determiner_slots == [frozenset({1})]

    def test_wide_lhs_rejected(self):
        sl = SchemaList("R")
        for name in "abcde":
            sl.add_attribute(name, is_det=True)
        sl.add_attribute("z")
        with pytest.raises(LhsTooLarge):
            sl.add_fd(FD("abcde", "z"))

    def test_unknown_names_rejected(self):
        sl = employee_list_in_source_order()
        with pytest.raises(UnknownAttribute):
            sl.add_fd(FD(["nope"], "CHPH"))
        with pytest.raises(UnknownAttribute):
            sl.add_fd(FD(["e_id"], "nope"))


class TestFindNode:
    def test_finds_by_name(self):
        sl = employee_list_in_source_order()
        node = sl.find_node("j_class")
        assert node is not None and node.node_id == 3

    def test_absent_on_empty(self):
        assert SchemaList("R").find_node("x") is None

    def test_matches_positional_scan(self):
        sl = SchemaList("R")
        sl.add_attribute("k", is_key=True)
        for name in "uvwxyz":
            sl.add_attribute(name)
        for node in sl.nodes:
            assert sl.find_node(node.attribute_name) is node


class TestInvariants:
    def test_stored_fds_reconstruct_input(self):
        sl = SchemaList("R")
        sl.add_attribute("a", is_key=True)
        sl.add_attribute("b", is_key=True)
        sl.add_attribute("d", is_det=True)
        for name in "cefg":
            sl.add_attribute(name)
        fds = [FD("ab", "c"), FD("ab", "d"), FD("b", "e"), FD("d", "f"), FD("d", "g")]
        for fd in fds:
            sl.add_fd(fd)
            sl.add_fd(fd)  # dedup keeps the multiset equal
        assert sorted(map(repr, sl.stored_fds())) == sorted(map(repr, fds))
        sl.check_invariants()

    def test_trivial_fd_rejected_by_type(self):
        with pytest.raises(InvalidFd):
            FD("ab", "a")
        with pytest.raises(InvalidFd):
            FD([], "a")

    def test_counter_is_per_list(self):
        first = SchemaList("R1")
        first.add_attribute("a", is_key=True)
        second = SchemaList("R2")
        assert second.node_id_counter == 1
