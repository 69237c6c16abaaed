"""Per-query pruning: strip subschemas irrelevant to a start/goal pair.

The compiled hierarchy is walked from the top level down to the original
nodes. At every level, hypernodes whose entire surroundings consist of a
single original node are dropped (any simple path entering them would have
to leave through that same node), then the survivors are flattened one
level. At level 0 this degenerates to iterated leaf pruning.
"""
from __future__ import annotations

from typing import Iterable, Optional

from .clustering import (ClusterHierarchy, HyperNode, context_adjacency,
                         is_contained, leaf_nodes)
from .graph import Graph


def sdeg(nodes: Iterable[HyperNode], n: HyperNode, graph: Graph) -> int:
    """Surrounding degree: original nodes contained in ``n``'s neighbours."""
    adjacency = context_adjacency(nodes, graph)
    if n not in adjacency:
        raise ValueError("node is not part of the context")
    surroundings: set[str] = set()
    for neighbour in adjacency[n]:
        surroundings |= leaf_nodes(neighbour)
    return len(surroundings)


def reduce_level(nodes: Iterable[HyperNode], start: str, goal: str,
                 graph: Graph) -> frozenset[HyperNode]:
    """Fixpoint of dropping nodes with a one-node surrounding, keeping any
    hypernode containing the start or the goal."""
    current = frozenset(nodes)
    while True:
        adjacency = context_adjacency(current, graph)
        survivors = set()
        for node in current:
            if is_contained(start, node) or is_contained(goal, node):
                survivors.add(node)
                continue
            surroundings: set[str] = set()
            for neighbour in adjacency[node]:
                surroundings |= leaf_nodes(neighbour)
            if len(surroundings) > 1:
                survivors.add(node)
        survivors = frozenset(survivors)
        if survivors == current:
            return current
        current = survivors


def reduce_graph(hierarchy: Optional[ClusterHierarchy], start: str, goal: str,
                 graph: Graph) -> Graph:
    """Reduced search graph for one point-to-point query.

    Walks the hierarchy top-down, pruning then flattening one level at a
    time; without a compiled hierarchy it falls back to leaf pruning on the
    raw node set. Edges survive when both endpoints do.
    """
    if start == goal:
        raise ValueError("points must be distinct")
    for point in (start, goal):
        if point not in graph.nodes:
            raise ValueError(f"unknown point {point!r}")

    if hierarchy is None:
        survivors = reduce_level(graph.nodes, start, goal, graph)
    else:
        current = hierarchy.levels[hierarchy.top_level_index]
        for level in range(hierarchy.top_level_index, -1, -1):
            current = reduce_level(current, start, goal, graph)
            if level > 0:
                current = frozenset().union(*current)
        survivors = frozenset(current)

    edges = frozenset(e for e in graph.edges if e.endpoints <= survivors)
    return Graph(nodes=survivors, edges=edges)
