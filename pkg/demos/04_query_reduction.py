# Per-query pruning with the compiled hierarchy: whole subschemas vanish,
# including ones containing cycles that plain leaf pruning cannot touch.
#
# The fixture: a dense 6-node core, a pendant triangle reachable only
# through core node h1, the two query endpoints, and a pendant chain.
from schemapath import (Edge, Graph, hcluster, leaf_nodes, reduce_graph,
                        reduce_level)

pairs = (
    [("h1", "h2"), ("h1", "h3"), ("h1", "h4"), ("h1", "h5"), ("h1", "h6"),
     ("h2", "h3"), ("h2", "h4"), ("h2", "h5"), ("h2", "h6"),
     ("h3", "h4"), ("h3", "h5"), ("h3", "h6"),
     ("h4", "h5"), ("h4", "h6"), ("h5", "h6")]
    + [("c1", "c2"), ("c2", "c3"), ("c3", "c1"), ("c1", "h1")]
    + [("src", "h2"), ("dst", "h3")]
    + [("h2", "y1"), ("y1", "y2")]
)
graph = Graph(
    frozenset(x for p in pairs for x in p),
    frozenset(Edge(frozenset(p), "-".join(sorted(p))) for p in pairs))

hierarchy = hcluster(graph)
print("level sizes:", hierarchy.level_sizes)

current = hierarchy.levels[hierarchy.top_level_index]
for depth in range(hierarchy.top_level_index, -1, -1):
    survivors = reduce_level(current, "src", "dst", graph)
    removed = sorted(
        ",".join(sorted(leaf_nodes(n))) for n in current - survivors)
    print(f"level {depth}: removed {removed or 'nothing'}")
    current = survivors
    if depth > 0:
        current = frozenset().union(*current)

reduced = reduce_graph(hierarchy, "src", "dst", graph)
print("\nsearch graph shrank from "
      f"{len(graph.nodes)} to {len(reduced.nodes)} nodes:")
print("  kept:", ", ".join(sorted(reduced.nodes)))
print("The pendant triangle c1-c2-c3 went away at a hyper level: its only "
      "way out is h1, so no simple src-dst path can use it.")
