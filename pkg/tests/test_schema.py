from __future__ import annotations

import json

import pytest

from schemapath import (SchemaSemanticError, SchemaSyntaxError, parse_schema,
                        schema_hash, serialize_schema, validate_connected)


def test_example_document_parses(example_schema):
    assert len(example_schema.types) == 6
    assert example_schema.obj_types == frozenset("ABCD")
    assert example_schema.rel_types == frozenset("fg")
    assert example_schema.preds == frozenset("rstu")
    assert example_schema.roles["f"] == frozenset("rs")
    assert example_schema.roles["g"] == frozenset("tu")
    assert example_schema.player == {"r": "A", "s": "B", "t": "C", "u": "A"}
    assert ("D", "B") in example_schema.subtype_pairs
    assert example_schema.poly_pairs == frozenset({("A", "C"), ("A", "g")})


def test_minimal_schema():
    schema = parse_schema(json.dumps({"object_types": [{"name": "A"}]}))
    assert schema.types == frozenset({"A"})
    assert schema.preds == frozenset()


def test_cweight_defaults_to_one(example_schema):
    assert set(example_schema.cweight.values()) == {1}


def test_role_in_two_relationship_types_rejected():
    doc = {
        "object_types": [{"name": "A"}],
        "relationship_types": [
            {"name": "f", "roles": [{"name": "r", "player": "A"}]},
            {"name": "g", "roles": [{"name": "r", "player": "A"}]},
        ],
    }
    with pytest.raises(SchemaSemanticError, match="role partition violated"):
        parse_schema(json.dumps(doc))


def test_duplicate_type_name_rejected():
    doc = {"object_types": [{"name": "A"}, {"name": "A"}]}
    with pytest.raises(SchemaSemanticError, match="duplicate type name"):
        parse_schema(json.dumps(doc))


def test_unknown_player_rejected():
    doc = {
        "object_types": [{"name": "A"}],
        "relationship_types": [
            {"name": "f", "roles": [{"name": "r", "player": "Z"}]},
        ],
    }
    with pytest.raises(SchemaSemanticError, match="unknown player"):
        parse_schema(json.dumps(doc))


def test_empty_role_set_rejected():
    doc = {
        "object_types": [{"name": "A"}],
        "relationship_types": [{"name": "f", "roles": []}],
    }
    with pytest.raises(SchemaSemanticError, match="non-empty roles"):
        parse_schema(json.dumps(doc))


def test_reserved_role_names_rejected():
    doc = {
        "object_types": [{"name": "A"}],
        "relationship_types": [
            {"name": "f", "roles": [{"name": "SPEC", "player": "A"}]},
        ],
    }
    with pytest.raises(SchemaSemanticError, match="reserved edge marker"):
        parse_schema(json.dumps(doc))


def test_subtype_must_relate_object_types():
    doc = {
        "object_types": [{"name": "A"}, {"name": "B"}],
        "relationship_types": [
            {"name": "f", "roles": [{"name": "r", "player": "A"}]},
        ],
        "subtype": [["A", "f"]],
    }
    with pytest.raises(SchemaSemanticError, match="must relate object types"):
        parse_schema(json.dumps(doc))


def test_poly_may_target_a_relationship_type(example_schema):
    assert ("A", "g") in example_schema.poly_pairs


def test_poly_must_start_at_object_type():
    doc = {
        "object_types": [{"name": "A"}],
        "relationship_types": [
            {"name": "f", "roles": [{"name": "r", "player": "A"}]},
        ],
        "poly": [["f", "A"]],
    }
    with pytest.raises(SchemaSemanticError, match="start at an object type"):
        parse_schema(json.dumps(doc))


def test_negative_cweight_rejected():
    doc = {"object_types": [{"name": "A", "cweight": -1}]}
    with pytest.raises(SchemaSemanticError, match="natural number"):
        parse_schema(json.dumps(doc))


def test_syntax_error_is_position_annotated():
    with pytest.raises(SchemaSyntaxError, match=r"line 1, column"):
        parse_schema("{not json")


def test_round_trip(example_schema):
    assert parse_schema(serialize_schema(example_schema)) == example_schema


def test_field_order_is_irrelevant(example_doc, example_schema):
    shuffled = {key: example_doc[key] for key in
                ("poly", "subtype", "relationship_types", "object_types")}
    shuffled["relationship_types"] = list(
        reversed(shuffled["relationship_types"]))
    assert parse_schema(json.dumps(shuffled)) == example_schema


def test_round_trip_hash_stable(example_schema):
    reparsed = parse_schema(serialize_schema(example_schema))
    assert schema_hash(reparsed) == schema_hash(example_schema)


def test_rel_is_total_on_roles(example_schema):
    owners = {role: example_schema.rel(role) for role in example_schema.preds}
    assert owners == {"r": "f", "s": "f", "t": "g", "u": "g"}


def test_validate_connected_example(example_schema):
    assert validate_connected(example_schema) is True


def test_validate_connected_two_isolated_types():
    schema = parse_schema(json.dumps(
        {"object_types": [{"name": "A"}, {"name": "B"}]}))
    assert validate_connected(schema) is False


def test_validate_connected_single_type():
    schema = parse_schema(json.dumps({"object_types": [{"name": "A"}]}))
    assert validate_connected(schema) is True
