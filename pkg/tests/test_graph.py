from __future__ import annotations

import json

import pytest

from schemapath import (Edge, Graph, Path, SchemaSemanticError, derive_graph,
                        parse_schema)


def test_example_graph_derivation(example_graph):
    assert len(example_graph.nodes) == 6
    assert len(example_graph.edges) == 7
    expected = {
        (("A", "f"), "r"),
        (("B", "f"), "s"),
        (("C", "g"), "t"),
        (("A", "g"), "u"),
        (("A", "C"), "POLY"),
        (("A", "g"), "POLY"),
        (("B", "D"), "SPEC"),
    }
    actual = {(tuple(sorted(e.endpoints)), e.label) for e in example_graph.edges}
    assert actual == expected


def test_single_type_graph():
    schema = parse_schema(json.dumps({"object_types": [{"name": "A"}]}))
    graph = derive_graph(schema)
    assert graph.nodes == frozenset({"A"})
    assert graph.edges == frozenset()


def test_parallel_role_edges_are_distinct():
    doc = {
        "object_types": [{"name": "A"}],
        "relationship_types": [
            {"name": "f", "roles": [
                {"name": "r", "player": "A"}, {"name": "s", "player": "A"}]},
        ],
    }
    graph = derive_graph(parse_schema(json.dumps(doc)))
    assert graph.nodes == frozenset({"A", "f"})
    labels = {e.label for e in graph.edges}
    assert labels == {"r", "s"}
    assert all(e.endpoints == frozenset({"A", "f"}) for e in graph.edges)


def test_one_edge_per_role(example_schema, example_graph):
    for role in example_schema.preds:
        assert sum(1 for e in example_graph.edges if e.label == role) == 1


def test_self_loop_subtype_rejected():
    doc = {"object_types": [{"name": "A"}], "subtype": [["A", "A"]]}
    with pytest.raises(SchemaSemanticError, match="degenerate edge"):
        derive_graph(parse_schema(json.dumps(doc)))


def test_degenerate_edge_constructor_rejected():
    with pytest.raises(SchemaSemanticError, match="degenerate edge"):
        Edge(frozenset({"A"}), "r")


def test_edge_endpoints_must_exist():
    with pytest.raises(SchemaSemanticError, match="unknown nodes"):
        Graph(frozenset({"A"}), frozenset({Edge(frozenset({"A", "B"}), "r")}))


def test_begin_end_length(example_graph):
    p = Path.single("D", example_graph).extend((("SPEC", "B"),), example_graph)
    assert (p.begin, p.end, p.length) == ("D", "B", 1)

    trivial = Path.single("A", example_graph)
    assert (trivial.begin, trivial.end, trivial.length) == ("A", "A", 0)

    p2 = Path.single("A", example_graph).extend(
        (("r", "f"), ("s", "B")), example_graph)
    assert p2.length == 2


def test_path_membership(example_graph):
    p = Path.single("A", example_graph).extend(
        (("r", "f"), ("s", "B")), example_graph)
    assert "f" in p
    assert "D" not in p
    assert "A" in Path.single("A", example_graph)


def test_extend_requires_an_edge(example_graph):
    base = Path.single("A", example_graph)
    extended = base.extend((("r", "f"),), example_graph)
    assert extended.seq == ("A", "r", "f")

    assert base.extend((), example_graph) == base

    with pytest.raises(ValueError, match="no edge"):
        base.extend((("s", "f"),), example_graph)


def test_single_requires_known_node(example_graph):
    with pytest.raises(ValueError, match="unknown node"):
        Path.single("Z", example_graph)


def test_path_validity_checked(example_graph):
    good = Path(("D", "B", "f"), ("SPEC", "s"))
    assert good.is_valid(example_graph)
    bad = Path(("D", "C"), ("SPEC",))
    assert not bad.is_valid(example_graph)


def test_acyclic_flag(example_graph):
    p = Path(("A", "f", "A"), ("r", "r"))
    assert not p.is_acyclic
    q = Path(("A", "f"), ("r",))
    assert q.is_acyclic


def test_connectivity(example_graph):
    assert example_graph.is_connected()
    two = Graph(frozenset({"A", "B"}), frozenset())
    assert not two.is_connected()


def test_adjacency_listing(example_graph):
    listing = example_graph.adjacency_listing()
    lines = dict(line.split(":", 1) for line in listing.splitlines())
    assert set(lines) == set(example_graph.nodes)
    assert lines["D"].strip() == "SPEC->B"
    assert "r->f" in lines["A"]
