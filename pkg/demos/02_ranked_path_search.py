# Incremental best-first search between two points, MORE semantics included.
#
# Lower badness = more relevant. A path is only released once nothing still
# open could beat it, so each round extends the listbox monotonically.
from fractions import Fraction
from pathlib import Path

from schemapath import (RelevanceConfig, badness, derive_graph, list_more,
                        load_schema, path_expr, release_order, start_state)

schema = load_schema(Path(__file__).parent / "bookstore.json")
graph = derive_graph(schema)
cfg = RelevanceConfig.for_schema(schema, c_weight=Fraction(1, 2))

state = start_state("Publisher", "Reader", graph)
round_number = 0
while not state.exhausted:
    previous = state.released
    state = list_more(state, cfg, graph)
    fresh = release_order(state.released - previous, cfg)
    round_number += 1
    label = "initial listing" if round_number == 1 else f"MORE #{round_number - 1}"
    print(f"--- {label}: {len(fresh)} new path(s)")
    for path in fresh:
        print(f"  badness {badness(path, cfg)}:  {path_expr(path, schema)}")

print(f"\nexhausted after {round_number} rounds, "
      f"{len(state.released)} paths total")

# The blend constant shifts the ranking: c_weight 0 ranks purely by length,
# c_weight 1 purely by conceptual-importance deviation.
for c in (0, 1):
    cfg_c = RelevanceConfig.for_schema(schema, c_weight=c)
    state = list_more(start_state("Publisher", "Reader", graph), cfg_c, graph)
    top = release_order(state.released, cfg_c)[0]
    print(f"c_weight={c}: first release is {path_expr(top, schema)}")
