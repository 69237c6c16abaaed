"""ORM-flavoured conceptual schema model: document format, validation, hashing.

The on-disk format is a JSON document with four top-level keys::

    {
      "object_types":       [{"name": "A", "cweight": 3}, ...],
      "relationship_types": [{"name": "f", "cweight": 1,
                              "roles": [{"name": "r", "player": "A"}, ...]}, ...],
      "subtype":            [["D", "B"], ...],
      "poly":               [["A", "C"], ...]
    }

``cweight`` defaults to 1 when omitted. Names are case-sensitive and unique.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Any, Mapping

from .errors import SchemaSemanticError, SchemaSyntaxError

#: Edge markers for subtype and polymorphism edges. Role names may not
#: collide with these.
SPEC_MARKER = "SPEC"
POLY_MARKER = "POLY"
RESERVED_MARKERS = frozenset({SPEC_MARKER, POLY_MARKER})

_TOP_LEVEL_KEYS = frozenset({"object_types", "relationship_types", "subtype", "poly"})
DEFAULT_CWEIGHT = 1


@dataclass(frozen=True)
class Schema:
    """Immutable conceptual schema universe.

    ``types`` is partitioned into ``obj_types`` and ``rel_types``; ``roles``
    partitions ``preds`` over the relationship types; ``player`` maps every
    role to the type at its base. Invariants are enforced on construction.
    """

    types: frozenset[str]
    rel_types: frozenset[str]
    obj_types: frozenset[str]
    preds: frozenset[str]
    roles: Mapping[str, frozenset[str]]
    player: Mapping[str, str]
    subtype_pairs: frozenset[tuple[str, str]]
    poly_pairs: frozenset[tuple[str, str]]
    cweight: Mapping[str, int]

    def __post_init__(self) -> None:
        _check_invariants(self)

    @cached_property
    def _role_owner(self) -> dict[str, str]:
        return {role: rel for rel, members in self.roles.items() for role in members}

    def rel(self, role: str) -> str:
        """Relationship type owning ``role``."""
        try:
            return self._role_owner[role]
        except KeyError:
            raise SchemaSemanticError(f"unknown role {role!r}") from None

    def weight(self, name: str) -> int:
        return self.cweight[name]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise SchemaSemanticError(message)


def _check_invariants(schema: Schema) -> None:
    _require(schema.rel_types <= schema.types and schema.obj_types <= schema.types,
             "object and relationship types must be drawn from the type set")
    _require(schema.rel_types.isdisjoint(schema.obj_types),
             "object and relationship types must be disjoint")
    _require(schema.rel_types | schema.obj_types == schema.types,
             "every type must be an object type or a relationship type")
    for name in schema.types:
        _require(isinstance(name, str) and name.strip() != "",
                 "type name must be a non-empty string")

    _require(set(schema.roles) == set(schema.rel_types),
             "roles must be declared for exactly the relationship types")
    seen: set[str] = set()
    for rel, members in schema.roles.items():
        _require(len(members) > 0, f"relationship type {rel!r} has an empty role set")
        _require(seen.isdisjoint(members),
                 f"role partition violated: {sorted(seen & set(members))!r} appear in more "
                 f"than one relationship type")
        seen |= members
    _require(seen == set(schema.preds),
             "roles must be a partition of the declared role set")
    for role in schema.preds:
        _require(isinstance(role, str) and role.strip() != "",
                 "role name must be a non-empty string")
        _require(role not in RESERVED_MARKERS,
                 f"role name {role!r} collides with a reserved edge marker")

    _require(set(schema.player) == set(schema.preds),
             "every role must have a player")
    for role, base in schema.player.items():
        _require(base in schema.types,
                 f"role {role!r} has unknown player {base!r}")

    for sub, sup in schema.subtype_pairs:
        _require(sub in schema.obj_types and sup in schema.obj_types,
                 f"subtype pair ({sub!r}, {sup!r}) must relate object types")
    for first, second in schema.poly_pairs:
        _require(first in schema.obj_types,
                 f"poly pair ({first!r}, {second!r}) must start at an object type")
        _require(second in schema.types,
                 f"poly pair ({first!r}, {second!r}) must target a known type")

    _require(set(schema.cweight) == set(schema.types),
             "cweight must be assigned to every type")
    for name, weight in schema.cweight.items():
        _require(isinstance(weight, int) and not isinstance(weight, bool) and weight >= 0,
                 f"cweight of {name!r} must be a natural number")


def parse_schema(source: str) -> Schema:
    """Parse a schema document; raises on syntax or invariant violations."""
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise SchemaSyntaxError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return schema_from_document(doc)


def load_schema(path: str | Path) -> Schema:
    return parse_schema(Path(path).read_text(encoding="utf-8"))


def schema_from_document(doc: Any) -> Schema:
    if not isinstance(doc, dict):
        raise SchemaSemanticError("schema document must be a JSON object")
    unknown = set(doc) - _TOP_LEVEL_KEYS
    _require(not unknown, f"unknown top-level keys: {sorted(unknown)}")

    obj_types: dict[str, int] = {}
    for entry in _as_list(doc.get("object_types", []), "object_types"):
        name, weight = _type_entry(entry, "object type")
        _require(name not in obj_types, f"duplicate type name {name!r}")
        obj_types[name] = weight

    rel_types: dict[str, int] = {}
    roles: dict[str, frozenset[str]] = {}
    player: dict[str, str] = {}
    for entry in _as_list(doc.get("relationship_types", []), "relationship_types"):
        name, weight = _type_entry(entry, "relationship type")
        _require(name not in obj_types and name not in rel_types,
                 f"duplicate type name {name!r}")
        rel_types[name] = weight
        declared = entry.get("roles")
        _require(isinstance(declared, list) and declared,
                 f"relationship type {name!r} must declare a non-empty roles list")
        members: list[str] = []
        for role_entry in declared:
            _require(isinstance(role_entry, dict), "role entries must be objects")
            role = role_entry.get("name")
            base = role_entry.get("player")
            _require(isinstance(role, str) and role.strip() != "",
                     f"relationship type {name!r} has a role without a name")
            _require(isinstance(base, str),
                     f"role {role!r} has no player")
            _require(role not in player and role not in members,
                     f"role partition violated: role {role!r} declared more than once")
            members.append(role)
            player[role] = base
        roles[name] = frozenset(members)

    subtype = frozenset(_pair_list(doc.get("subtype", []), "subtype"))
    poly = frozenset(_pair_list(doc.get("poly", []), "poly"))

    types = frozenset(obj_types) | frozenset(rel_types)
    return Schema(
        types=types,
        rel_types=frozenset(rel_types),
        obj_types=frozenset(obj_types),
        preds=frozenset(player),
        roles=roles,
        player=player,
        subtype_pairs=subtype,
        poly_pairs=poly,
        cweight={**obj_types, **rel_types},
    )


def _as_list(value: Any, key: str) -> list:
    if not isinstance(value, list):
        raise SchemaSemanticError(f"{key} must be a list")
    return value


def _type_entry(entry: Any, kind: str) -> tuple[str, int]:
    if not isinstance(entry, dict):
        raise SchemaSemanticError(f"{kind} entries must be objects")
    name = entry.get("name")
    if not isinstance(name, str) or name.strip() == "":
        raise SchemaSemanticError(f"{kind} entry is missing a name")
    weight = entry.get("cweight", DEFAULT_CWEIGHT)
    if not isinstance(weight, int) or isinstance(weight, bool) or weight < 0:
        raise SchemaSemanticError(f"cweight of {name!r} must be a natural number")
    return name, weight


def _pair_list(value: Any, key: str) -> list[tuple[str, str]]:
    pairs = []
    for item in _as_list(value, key):
        if not (isinstance(item, (list, tuple)) and len(item) == 2
                and all(isinstance(x, str) for x in item)):
            raise SchemaSemanticError(f"{key} entries must be [name, name] pairs")
        pairs.append((item[0], item[1]))
    return pairs


def schema_to_document(schema: Schema) -> dict:
    """Canonical (sorted) document form; stable across runs."""
    return {
        "object_types": [
            {"name": name, "cweight": schema.cweight[name]}
            for name in sorted(schema.obj_types)
        ],
        "relationship_types": [
            {
                "name": name,
                "cweight": schema.cweight[name],
                "roles": [
                    {"name": role, "player": schema.player[role]}
                    for role in sorted(schema.roles[name])
                ],
            }
            for name in sorted(schema.rel_types)
        ],
        "subtype": [list(pair) for pair in sorted(schema.subtype_pairs)],
        "poly": [list(pair) for pair in sorted(schema.poly_pairs)],
    }


def serialize_schema(schema: Schema) -> str:
    return json.dumps(schema_to_document(schema), indent=2, sort_keys=True) + "\n"


def schema_hash(schema: Schema) -> str:
    """Content hash of the canonical document; keys compiled artifacts."""
    return hashlib.sha256(serialize_schema(schema).encode("utf-8")).hexdigest()


def validate_connected(schema: Schema) -> bool:
    """True iff the derived graph is connected (single-node graphs count)."""
    from .graph import derive_graph

    return derive_graph(schema).is_connected()
