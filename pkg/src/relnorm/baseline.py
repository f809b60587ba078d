"""Two-sequence baseline representation and the comparison harness.

The baseline keeps one sequence of attributes and a second sequence of
dependencies, so classification has to re-derive each attribute's
determiners by scanning the dependency list — the lookup cost the
single-sequence design avoids by storing determiner slots in the nodes.

Memory is compared under an abstract cell model read off the node layout:
name cells of 50 bytes, flag cells of 1, id and link cells of 4, four
slots of four ids per node.  Absolute byte counts from any concrete
runtime are not reproduced; the model makes the size comparison explicit
and checkable.

Timing compares the classification-plus-synthesis pass of both
representations from prebuilt inputs.  The shared preprocessing
(flattening, splitting, cover computation) is identical for both engines
and excluded from both sides.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import EmptyCorpus, LhsTooLarge, UnknownAttribute
from .normalizer import (
    Classification,
    DependencyGroup,
    PipelineState,
    RawSchema,
    classify,
    decompose_2nf,
    decompose_3nf,
    prepare,
)
from .schema_model import AttributeKind, Limits, SchemaList


@dataclass(frozen=True)
class TwoListAttribute:
    name: str
    kind: AttributeKind = AttributeKind.ATOMIC
    is_key: bool = False


@dataclass(frozen=True)
class TwoListFd:
    lhs: tuple[str, ...]
    rhs: str


@dataclass(frozen=True)
class TwoListSchema:
    """One attribute sequence plus one dependency sequence."""

    relation_name: str
    attribute_list: tuple[TwoListAttribute, ...]
    fd_list: tuple[TwoListFd, ...]
    limits: Limits = field(default_factory=Limits)

    def __post_init__(self) -> None:
        known = {a.name for a in self.attribute_list}
        for fd in self.fd_list:
            if len(fd.lhs) > self.limits.max_lhs:
                raise LhsTooLarge(f"left-hand side of size {len(fd.lhs)} exceeds limit")
            missing = (set(fd.lhs) | {fd.rhs}) - known
            if missing:
                raise UnknownAttribute(f"dependency mentions unknown attributes: {sorted(missing)}")


@dataclass(frozen=True)
class CostModel:
    """Byte costs for the abstract memory comparison."""

    name_cell: int = 50
    flag_cell: int = 1
    id_cell: int = 4
    link_cell: int = 4
    slots_per_node: int = 4
    ids_per_slot: int = 4

    def __post_init__(self) -> None:
        for name in ("name_cell", "flag_cell", "id_cell", "link_cell", "slots_per_node", "ids_per_slot"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def memory_cells_single(schema_list: SchemaList, model: CostModel | None = None) -> int:
    """Bytes for the single-sequence layout: N times the ten-field node."""
    m = model or CostModel()
    per_node = (
        m.name_cell            # attribute name
        + 2 * m.flag_cell      # attribute type, determiner flag
        + m.id_cell            # node id
        + m.slots_per_node * m.ids_per_slot * m.id_cell
        + m.flag_cell          # key flag
        + m.link_cell          # successor link
    )
    return len(schema_list.nodes) * per_node


def memory_cells_double(schema: TwoListSchema, model: CostModel | None = None) -> int:
    """Bytes for the two-sequence layout: attribute nodes plus dependency nodes."""
    m = model or CostModel()
    attr_node = m.name_cell + 2 * m.flag_cell + m.link_cell
    fd_node = schema.limits.max_lhs * m.name_cell + m.name_cell + m.link_cell
    return len(schema.attribute_list) * attr_node + len(schema.fd_list) * fd_node


def two_list_from_state(state: PipelineState, *, use_cover: bool) -> TwoListSchema:
    """Build the baseline representation from a pipeline run.

    ``use_cover`` selects the canonical cover (what the classification
    pass consumes) instead of the dependencies as entered (what the
    memory comparison uses).  Attribute order matches the single list.
    """
    attrs = tuple(
        TwoListAttribute(node.attribute_name, node.attribute_type, node.is_key_attribute)
        for node in state.schema_list.nodes
    )
    source = state.cover if use_cover else state.split
    position = {a.name: i for i, a in enumerate(attrs)}
    fds = tuple(
        TwoListFd(tuple(sorted(fd.lhs, key=position.__getitem__)), fd.rhs)
        for fd in source
    )
    return TwoListSchema(state.schema_list.relation_name, attrs, fds, state.schema_list.limits)


def classify_two_list(schema: TwoListSchema) -> Classification:
    """Classification over the two-sequence layout.

    Mirrors the single-sequence classification but must recover each
    attribute's determiners by scanning the dependency list per
    attribute.  Produces an identical result for matching inputs.
    """
    primes = [a.name for a in schema.attribute_list if a.is_key]
    prime_set = set(primes)
    position = {a.name: i + 1 for i, a in enumerate(schema.attribute_list)}
    prime_ids = frozenset(position[p] for p in primes)

    a1: list[str] = list(primes)
    a2: list[tuple[frozenset[str], list[str]]] = []
    a3: list[tuple[frozenset[str], list[str]]] = []

    def file_into(groups: list[tuple[frozenset[str], list[str]]], det: frozenset[str], name: str) -> None:
        for existing, dependents in groups:
            if existing == det:
                if name not in dependents:
                    dependents.append(name)
                return
        groups.append((det, [name]))

    for attr in schema.attribute_list:
        if attr.is_key:
            continue
        determiners = [fd.lhs for fd in schema.fd_list if fd.rhs == attr.name]
        if not determiners:
            a1.append(attr.name)
            continue
        for lhs in determiners:
            det = set(lhs)
            if det == prime_set:
                a1.append(attr.name)
            elif det < prime_set:
                file_into(a2, frozenset(det), attr.name)
            else:
                file_into(a3, frozenset(det), attr.name)

    def freeze(groups: list[tuple[frozenset[str], list[str]]]) -> tuple[DependencyGroup, ...]:
        return tuple(
            DependencyGroup(tuple(sorted(det, key=position.__getitem__)), tuple(deps))
            for det, deps in groups
        )

    non_key = tuple(a.name for a in schema.attribute_list if not a.is_key)
    return Classification(
        relation_name=schema.relation_name,
        a1=tuple(a1),
        a2=freeze(a2),
        a3=freeze(a3),
        prime_attributes=tuple(primes),
        prime_key_node_ids=prime_ids,
        all_attributes=non_key,
    )


CSV_HEADER = (
    "relation,attrs,fds,single_bytes,double_bytes,mem_ratio,"
    "t2nf_single_us,t2nf_double_us,t3nf_single_us,t3nf_double_us"
)


@dataclass(frozen=True)
class BenchRow:
    relation: str
    attrs: int
    fds: int
    single_bytes: int
    double_bytes: int
    mem_ratio: float
    t2nf_single_us: float
    t2nf_double_us: float
    t3nf_single_us: float
    t3nf_double_us: float


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]
    repetitions: int

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        for r in self.rows:
            lines.append(
                f"{r.relation},{r.attrs},{r.fds},{r.single_bytes},{r.double_bytes},"
                f"{r.mem_ratio:.4f},{r.t2nf_single_us:.2f},{r.t2nf_double_us:.2f},"
                f"{r.t3nf_single_us:.2f},{r.t3nf_double_us:.2f}"
            )
        return "\n".join(lines) + "\n"

    def average_double_over_single_memory(self) -> float:
        return statistics.mean(r.double_bytes / r.single_bytes for r in self.rows)

    def to_text(self) -> str:
        header = (
            f"{'relation':<26}{'attrs':>6}{'fds':>5}{'single_B':>10}{'double_B':>10}"
            f"{'dbl/sgl':>9}{'2nf_s_us':>10}{'2nf_d_us':>10}{'3nf_s_us':>10}{'3nf_d_us':>10}"
        )
        lines = [header, "-" * len(header)]
        for r in self.rows:
            lines.append(
                f"{r.relation:<26}{r.attrs:>6}{r.fds:>5}{r.single_bytes:>10}{r.double_bytes:>10}"
                f"{r.double_bytes / r.single_bytes:>9.3f}{r.t2nf_single_us:>10.2f}"
                f"{r.t2nf_double_us:>10.2f}{r.t3nf_single_us:>10.2f}{r.t3nf_double_us:>10.2f}"
            )
        lines.append("-" * len(header))
        lines.append(
            f"repetitions per timing: {self.repetitions}; "
            f"corpus average double/single memory: "
            f"{self.average_double_over_single_memory():.3f}"
        )
        lines.append(
            "timings cover the classification+synthesis pass per representation; "
            "shared preprocessing is excluded from both sides"
        )
        return "\n".join(lines) + "\n"


def _median_us(pass_fn: Callable[[], object], repetitions: int, inner: int) -> float:
    samples = []
    for _ in range(repetitions):
        start = time.perf_counter_ns()
        for _ in range(inner):
            pass_fn()
        elapsed = time.perf_counter_ns() - start
        samples.append(elapsed / inner / 1000.0)
    return statistics.median(samples)


def bench(
    corpus: Sequence[RawSchema],
    repetitions: int = 5,
    model: CostModel | None = None,
    inner: int = 25,
) -> BenchReport:
    """Compare both representations over a corpus of relations.

    For every relation: memory bytes under the cost model for both
    layouts (the two-sequence layout holding the dependencies as
    entered), plus median wall-clock for the classification+synthesis
    pass of each layout at both normal forms.
    """
    if not corpus:
        raise EmptyCorpus("benchmark requires at least one relation")
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    cost = model or CostModel()
    rows: list[BenchRow] = []
    for raw in corpus:
        state = prepare(raw)
        entered = two_list_from_state(state, use_cover=False)
        covered = two_list_from_state(state, use_cover=True)
        single_bytes = memory_cells_single(state.schema_list, cost)
        double_bytes = memory_cells_double(entered, cost)
        schema_list = state.schema_list

        t2nf_single = _median_us(lambda: decompose_2nf(classify(schema_list)), repetitions, inner)
        t2nf_double = _median_us(lambda: decompose_2nf(classify_two_list(covered)), repetitions, inner)
        t3nf_single = _median_us(lambda: decompose_3nf(classify(schema_list)), repetitions, inner)
        t3nf_double = _median_us(lambda: decompose_3nf(classify_two_list(covered)), repetitions, inner)

        rows.append(
            BenchRow(
                relation=raw.relation_name,
                attrs=len(state.flat.attributes),
                fds=len(state.split),
                single_bytes=single_bytes,
                double_bytes=double_bytes,
                mem_ratio=single_bytes / double_bytes,
                t2nf_single_us=t2nf_single,
                t2nf_double_us=t2nf_double,
                t3nf_single_us=t3nf_single,
                t3nf_double_us=t3nf_double,
            )
        )
    return BenchReport(tuple(rows), repetitions)
