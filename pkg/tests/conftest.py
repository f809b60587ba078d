import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from relnorm import corpus


@pytest.fixture(scope="session")
def corpus_schemas():
    return {name: corpus.load(name) for name in corpus.corpus_names()}


@pytest.fixture(scope="session")
def trace_schema():
    return corpus.load("Trace")


@pytest.fixture(scope="session")
def employee_schema():
    return corpus.load("Employee")
