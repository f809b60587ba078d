"""Property tests for the set-algebra operators."""

import hypothesis.strategies as st
from hypothesis import assume, given, settings

from oracles import (
    brute_closure,
    equivalent_on_all_subsets,
    has_extraneous_lhs_attribute,
    has_redundant_fd,
)
from relnorm.fd_engine import FdSet, closure, implies, minimal_cover
from relnorm.schema_model import FunctionalDependency, SchemaList

UNIVERSE = tuple("abcdef")


@st.composite
def fd_sets(draw):
    size = draw(st.integers(min_value=2, max_value=len(UNIVERSE)))
    universe = UNIVERSE[:size]
    count = draw(st.integers(min_value=0, max_value=8))
    fds = []
    for _ in range(count):
        lhs = draw(
            st.sets(st.sampled_from(universe), min_size=1, max_size=min(3, size))
        )
        options = [u for u in universe if u not in lhs]
        if not options:
            continue
        rhs = draw(st.sampled_from(options))
        fds.append(FunctionalDependency(frozenset(lhs), rhs))
    return FdSet(tuple(fds), universe)


@given(st.data())
def test_closure_is_extensive_and_matches_oracle(data):
    fds = data.draw(fd_sets())
    attrs = data.draw(st.sets(st.sampled_from(fds.universe)))
    got = closure(attrs, fds)
    assert attrs <= got
    assert got == brute_closure(attrs, fds)


@given(st.data())
def test_closure_is_monotone(data):
    fds = data.draw(fd_sets())
    small = data.draw(st.sets(st.sampled_from(fds.universe)))
    extra = data.draw(st.sets(st.sampled_from(fds.universe)))
    assert closure(small, fds) <= closure(small | extra, fds)


@given(st.data())
def test_closure_is_idempotent(data):
    fds = data.draw(fd_sets())
    attrs = data.draw(st.sets(st.sampled_from(fds.universe)))
    once = closure(attrs, fds)
    assert closure(once, fds) == once


@given(st.data())
def test_implies_agrees_with_closure(data):
    fds = data.draw(fd_sets())
    lhs = data.draw(st.sets(st.sampled_from(fds.universe), min_size=1))
    options = [u for u in fds.universe if u not in lhs]
    if not options:
        return
    rhs = data.draw(st.sampled_from(options))
    candidate = FunctionalDependency(frozenset(lhs), rhs)
    assert implies(fds, candidate) == (rhs in closure(lhs, fds))


@settings(max_examples=60)
@given(fd_sets())
def test_minimal_cover_is_equivalent_and_minimal(fds):
    cover = minimal_cover(fds)
    assert equivalent_on_all_subsets(fds, cover)
    assert not has_redundant_fd(cover)
    assert not has_extraneous_lhs_attribute(cover)


@settings(max_examples=60)
@given(fd_sets())
def test_minimal_cover_is_a_fixpoint(fds):
    cover = minimal_cover(fds)
    assert minimal_cover(cover).fds == cover.fds


@settings(max_examples=60)
@given(fd_sets())
def test_schema_list_round_trips_a_cover(fds):
    """Referential integrity plus slot reconstruction after a random build."""
    cover = minimal_cover(fds)
    per_dependent = {}
    determiners = set()
    for fd in cover:
        determiners |= fd.lhs
        per_dependent[fd.rhs] = per_dependent.get(fd.rhs, 0) + 1
    assume(not per_dependent or max(per_dependent.values()) <= 4)
    sl = SchemaList("R")
    ordered = sorted(fds.universe, key=lambda n: (n not in determiners, fds.universe.index(n)))
    first = ordered[0]
    sl.add_attribute(first, is_key=True, is_det=first in determiners)
    for name in ordered[1:]:
        # keep determiners ahead of the rest; the single key stays first
        sl.add_attribute(name, is_det=name in determiners)
    for fd in cover:
        sl.add_fd(fd)
    got = {(fd.lhs, fd.rhs) for fd in sl.stored_fds()}
    expected = {(fd.lhs, fd.rhs) for fd in cover}
    assert got == expected
    assert len(sl.stored_fds()) == len(cover)
