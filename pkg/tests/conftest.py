import json
from pathlib import Path

import pytest

from nlquery.service import AppConfig, build_engine

TESTS_DIR = Path(__file__).parent


@pytest.fixture(scope="session")
def engine():
    return build_engine(AppConfig())


@pytest.fixture(scope="session")
def graph(engine):
    return engine.graph


@pytest.fixture(scope="session")
def value_index(engine):
    return engine.index


@pytest.fixture(scope="session")
def database(engine):
    return engine.db


@pytest.fixture(scope="session")
def lexicon(engine):
    return engine.lexicon


@pytest.fixture(scope="session")
def golden_queries():
    with open(TESTS_DIR / "data" / "golden_queries.json", encoding="utf-8") as fh:
        return json.load(fh)
