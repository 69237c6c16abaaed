from __future__ import annotations

import json
from collections import defaultdict

from schemapath import (Connector, Path, derive_graph, parse_schema,
                        path_expr)
from schemapath.schema import RESERVED_MARKERS

from oracles import all_simple_paths


def test_trivial_path(example_graph, example_schema):
    expr = path_expr(Path.single("A", example_graph), example_schema)
    assert expr.render() == "A"
    assert expr.tokens == ("A",)


def test_forward_and_reversed_roles(example_graph, example_schema):
    p = Path(("A", "f", "B"), ("r", "s"))
    expr = path_expr(p, example_schema)
    assert expr.render() == "A . r . f . s~ . B"
    assert expr.tokens[1] == Connector(role="r", reverse=False)
    assert expr.tokens[3] == Connector(role="s", reverse=True)


def test_bare_joins_collapse(example_graph, example_schema):
    p = Path(("D", "B", "f", "A", "C"), ("SPEC", "s", "r", "POLY"))
    expr = path_expr(p, example_schema)
    assert expr.render() == "D . B . s . f . r~ . A . C"


def test_expression_starts_and_ends_on_type_names(example_graph,
                                                  example_schema):
    for (f, t) in (("D", "C"), ("A", "B")):
        for nodes, labels in all_simple_paths(example_graph, f, t):
            expr = path_expr(Path(nodes, labels), example_schema)
            assert isinstance(expr.tokens[0], str)
            assert isinstance(expr.tokens[-1], str)


def test_connector_cases_are_exhaustive_and_exclusive(example_graph,
                                                      example_schema):
    for edge in example_graph.edges:
        for destination in edge.endpoints:
            cases = [
                edge.label in RESERVED_MARKERS,
                (destination in example_schema.rel_types
                 and edge.label in example_schema.roles.get(destination, ())),
                (edge.label not in RESERVED_MARKERS
                 and not (destination in example_schema.rel_types
                          and edge.label in example_schema.roles.get(
                              destination, ()))),
            ]
            assert sum(cases) == 1


def test_spec_poly_renderings_collide_and_nothing_else():
    doc = {
        "object_types": [{"name": "A"}, {"name": "B"}, {"name": "C"}],
        "relationship_types": [
            {"name": "f", "roles": [
                {"name": "r", "player": "A"}, {"name": "s", "player": "B"}]},
        ],
        "subtype": [["A", "B"]],
        "poly": [["A", "B"], ["B", "C"]],
    }
    schema = parse_schema(json.dumps(doc))
    graph = derive_graph(schema)

    via_spec = path_expr(Path(("A", "B"), ("SPEC",)), schema)
    via_poly = path_expr(Path(("A", "B"), ("POLY",)), schema)
    assert via_spec.render() == via_poly.render() == "A . B"

    # Injective up to that collapse: paths with one rendering differ only in
    # SPEC/POLY label positions.
    by_rendering = defaultdict(list)
    for f in sorted(graph.nodes):
        for t in sorted(graph.nodes):
            if f == t:
                continue
            for nodes, labels in all_simple_paths(graph, f, t):
                by_rendering[path_expr(Path(nodes, labels), schema).render()] \
                    .append((nodes, labels))
    for rendering, paths in by_rendering.items():
        for nodes, labels in paths[1:]:
            first_nodes, first_labels = paths[0]
            assert nodes == first_nodes
            assert all(
                a == b or {a, b} <= {"SPEC", "POLY"}
                for a, b in zip(labels, first_labels))
