# Compiling the clustering hierarchy: repeated coarsening until the
# hypergraph is a tree, plus the on-disk artifact keyed by schema hash.
import json
import tempfile
from pathlib import Path

from schemapath import (Edge, Graph, derive_graph, hcluster, leaf_nodes,
                        load_hierarchy, load_schema, save_hierarchy,
                        schema_hash)

schema = load_schema(Path(__file__).parent / "bookstore.json")
graph = derive_graph(schema)

hierarchy = hcluster(graph)
print("level sizes:", " -> ".join(str(n) for n in hierarchy.level_sizes))
for depth, level in enumerate(hierarchy.levels):
    rendered = sorted(",".join(sorted(leaf_nodes(node))) for node in level)
    print(f"  level {depth}: {rendered}")
print("stored hypernodes:", hierarchy.total_stored)

# Worst case: the complete graph on 7 nodes needs 3 clustering steps and
# stores 16 hypernodes, the theoretical maximum for n=7.
names = [chr(ord("a") + i) for i in range(7)]
k7 = Graph(
    frozenset(names),
    frozenset(Edge(frozenset((x, y)), f"{x}{y}")
              for i, x in enumerate(names) for y in names[i + 1:]))
worst = hcluster(k7)
n, k = 7, 3
print(f"\nK7: levels {worst.level_sizes}, stored {worst.total_stored} "
      f"(bound n*k - k^2 + k + 1 = {n * k - k * k + k + 1})")

# The compiled artifact round-trips through disk and refuses stale loads.
with tempfile.TemporaryDirectory() as scratch:
    artifact = Path(scratch) / "bookstore.compiled.json"
    save_hierarchy(hierarchy, schema_hash(schema), artifact)
    print("\nartifact keys:", sorted(json.loads(artifact.read_text())))
    reloaded = load_hierarchy(artifact, graph, schema_hash(schema))
    print("reload equals original:", reloaded == hierarchy)
