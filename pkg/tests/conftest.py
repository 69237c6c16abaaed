from __future__ import annotations

import json
import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from schemapath import RelevanceConfig, derive_graph, parse_schema

from oracles import random_config, random_connected_graph

EXAMPLE_DOC = {
    "object_types": [
        {"name": "A"}, {"name": "B"}, {"name": "C"}, {"name": "D"},
    ],
    "relationship_types": [
        {"name": "f", "roles": [
            {"name": "r", "player": "A"}, {"name": "s", "player": "B"}]},
        {"name": "g", "roles": [
            {"name": "t", "player": "C"}, {"name": "u", "player": "A"}]},
    ],
    "subtype": [["D", "B"]],
    "poly": [["A", "C"], ["A", "g"]],
}

CORPUS_SEED = 94507
CORPUS_SIZE = 500


@pytest.fixture()
def example_doc():
    return json.loads(json.dumps(EXAMPLE_DOC))


@pytest.fixture(scope="session")
def example_schema():
    return parse_schema(json.dumps(EXAMPLE_DOC))


@pytest.fixture(scope="session")
def example_graph(example_schema):
    return derive_graph(example_schema)


@pytest.fixture(scope="session")
def example_cfg(example_schema):
    return RelevanceConfig.for_schema(example_schema)


@pytest.fixture(scope="session")
def corpus():
    """500 random connected graphs (4-14 nodes) with random weights."""
    rng = random.Random(CORPUS_SEED)
    entries = []
    for _ in range(CORPUS_SIZE):
        graph = random_connected_graph(rng, rng.randint(4, 14))
        entries.append((graph, random_config(rng, graph)))
    return entries


@pytest.fixture()
def example_schema_file(tmp_path, example_doc):
    path = tmp_path / "example.json"
    path.write_text(json.dumps(example_doc), encoding="utf-8")
    return path
