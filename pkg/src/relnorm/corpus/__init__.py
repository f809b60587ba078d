"""Bundled example relations used by the command-line tool and the tests."""

from __future__ import annotations

from importlib import resources

from ..normalizer import RawSchema
from ..schema_file import parse_schema_file

# Canonical corpus, in source order.
CORPUS_NAMES: tuple[str, ...] = (
    "Beer_Relation",
    "GH_Relation",
    "ClientRental",
    "AB_Relation",
    "Invoice",
    "Emp",
    "Project",
    "WellmeadowsHospital",
    "StaffPropertyInspection",
    "Report",
)

_FILES: dict[str, str] = {
    "Beer_Relation": "beer.schema",
    "GH_Relation": "gh.schema",
    "ClientRental": "client_rental.schema",
    "AB_Relation": "ab.schema",
    "Invoice": "invoice.schema",
    "Emp": "emp.schema",
    "Project": "project.schema",
    "WellmeadowsHospital": "wellmeadows.schema",
    "StaffPropertyInspection": "staff_property_inspection.schema",
    "Report": "report.schema",
    # extra worked examples, not part of the canonical corpus
    "Trace": "trace.schema",
    "Employee": "employee.schema",
}


def corpus_names() -> tuple[str, ...]:
    return CORPUS_NAMES


def corpus_text(name: str) -> str:
    filename = _FILES[name]
    return resources.files(__package__).joinpath(filename).read_text(encoding="utf-8")


def corpus_path(name: str):
    return resources.files(__package__).joinpath(_FILES[name])


def load(name: str) -> RawSchema:
    return parse_schema_file(corpus_text(name))


def load_all() -> list[RawSchema]:
    return [load(name) for name in CORPUS_NAMES]
