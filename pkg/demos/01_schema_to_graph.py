# How a conceptual schema becomes a labelled search graph.
#
# Every type (object or relationship) is a node. Every role contributes one
# edge between its player and the relationship type owning it; subtype and
# polymorphism pairs contribute SPEC/POLY edges. Parallel edges with
# different labels are kept apart.
from pathlib import Path

from schemapath import derive_graph, load_schema, validate_connected

schema = load_schema(Path(__file__).parent / "bookstore.json")

print("object types:      ", ", ".join(sorted(schema.obj_types)))
print("relationship types:", ", ".join(sorted(schema.rel_types)))
for rel in sorted(schema.rel_types):
    roles = ", ".join(
        f"{role}:{schema.player[role]}" for role in sorted(schema.roles[rel]))
    print(f"  {rel}({roles})")

graph = derive_graph(schema)
print(f"\ngraph: {len(graph.nodes)} nodes, {len(graph.edges)} edges")
for edge in sorted(graph.edges, key=lambda e: (sorted(e.endpoints), e.label)):
    x, y = sorted(edge.endpoints)
    print(f"  {x} --[{edge.label}]-- {y}")

print("\nconnected:", validate_connected(schema))
print("neighbours of Book:", ", ".join(graph.neighbors("Book")))
