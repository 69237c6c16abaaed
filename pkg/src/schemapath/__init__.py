"""Ranked point-to-point path queries over ORM-style conceptual schemas."""

from .clustering import (Clustering, ClusterHierarchy, cluster, context_adjacency,
                         deg, extend_cluster, hcluster, hyper_edges, is_contained,
                         leaf_nodes, load_hierarchy, ndeg, reach, save_hierarchy)
from .errors import (CompiledHierarchyError, SchemaError, SchemaSemanticError,
                     SchemaSyntaxError)
from .expressions import Connector, PathExpression, path_expr
from .graph import Edge, Graph, Path, derive_graph
from .reduction import reduce_graph, reduce_level, sdeg
from .relevance import (DEFAULT_C_WEIGHT, RelevanceConfig, badness, best,
                        coerce_c_weight)
from .schema import (POLY_MARKER, SPEC_MARKER, Schema, load_schema, parse_schema,
                     schema_hash, schema_to_document, serialize_schema,
                     validate_connected)
from .search import (SearchState, increment, list_more, multi_point,
                     release_order, start_state)

__version__ = "0.1.0"

__all__ = [
    "Clustering", "ClusterHierarchy", "CompiledHierarchyError", "Connector",
    "DEFAULT_C_WEIGHT", "Edge", "Graph", "Path", "PathExpression",
    "POLY_MARKER", "RelevanceConfig", "SPEC_MARKER", "Schema", "SchemaError",
    "SchemaSemanticError", "SchemaSyntaxError", "SearchState", "badness",
    "best", "cluster", "coerce_c_weight", "context_adjacency", "deg",
    "derive_graph", "extend_cluster", "hcluster", "hyper_edges", "increment",
    "is_contained", "leaf_nodes", "list_more", "load_hierarchy", "load_schema",
    "multi_point", "ndeg", "parse_schema", "path_expr", "reach",
    "reduce_graph", "reduce_level", "release_order", "save_hierarchy",
    "schema_hash", "schema_to_document", "sdeg", "serialize_schema",
    "start_state", "validate_connected",
]
