"""Hierarchy of hypergraph clusterings: the schema compilation step.

A hypernode is an original node name or a frozenset of hypernodes. Repeated
clustering coarsens the graph level by level until the induced hypergraph is
a tree; the per-query reduction later walks this hierarchy top-down to prune
whole subschemas (including ones containing cycles).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path as FilePath
from typing import FrozenSet, Iterable, Union

from .errors import CompiledHierarchyError
from .graph import Graph

HyperNode = Union[str, FrozenSet["HyperNode"]]

HIERARCHY_FORMAT = "schemapath-hierarchy/1"


@lru_cache(maxsize=None)
def leaf_nodes(node: HyperNode) -> frozenset[str]:
    """Original node names contained in (or equal to) a hypernode."""
    if isinstance(node, str):
        return frozenset((node,))
    out: set[str] = set()
    for member in node:
        out |= leaf_nodes(member)
    return frozenset(out)


def is_contained(inner: HyperNode, outer: HyperNode) -> bool:
    """Equal-or-nested-inside relation over hypernodes (reflexive)."""
    if inner == outer:
        return True
    if isinstance(outer, frozenset):
        return any(is_contained(inner, member) for member in outer)
    return False


def reach(n: HyperNode, m: HyperNode, graph: Graph) -> bool:
    """True iff some original edge joins a node inside ``n`` to one inside ``m``."""
    left, right = leaf_nodes(n), leaf_nodes(m)
    return any(
        (x in left and y in right) or (y in left and x in right)
        for x, y in graph.edge_pairs
    )


def context_adjacency(nodes: Iterable[HyperNode],
                      graph: Graph) -> dict[HyperNode, frozenset[HyperNode]]:
    """Neighbour map between hypernodes, induced by the original edges."""
    nodes = tuple(nodes)
    owner: dict[str, HyperNode] = {}
    for hyper in nodes:
        for leaf in leaf_nodes(hyper):
            owner[leaf] = hyper
    neighbours: dict[HyperNode, set[HyperNode]] = {hyper: set() for hyper in nodes}
    for x, y in graph.edge_pairs:
        hx, hy = owner.get(x), owner.get(y)
        if hx is None or hy is None or hx == hy:
            continue
        neighbours[hx].add(hy)
        neighbours[hy].add(hx)
    return {hyper: frozenset(out) for hyper, out in neighbours.items()}


def deg(nodes: Iterable[HyperNode], n: HyperNode, graph: Graph) -> int:
    """Number of other hypernodes in the context reachable from ``n``."""
    adjacency = context_adjacency(nodes, graph)
    if n not in adjacency:
        raise ValueError("node is not part of the context")
    return len(adjacency[n])


def ndeg(nodes: Iterable[HyperNode], n: HyperNode, graph: Graph) -> int:
    """Like :func:`deg` but leaf neighbours (degree 1) do not count."""
    adjacency = context_adjacency(nodes, graph)
    if n not in adjacency:
        raise ValueError("node is not part of the context")
    return sum(1 for m in adjacency[n] if len(adjacency[m]) > 1)


def _is_connected_context(nodes: frozenset[HyperNode], graph: Graph) -> bool:
    if not nodes:
        return True
    adjacency = context_adjacency(nodes, graph)
    start = next(iter(nodes))
    seen = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for nbr in adjacency[current]:
            if nbr not in seen:
                seen.add(nbr)
                frontier.append(nbr)
    return len(seen) == len(nodes)


@dataclass(frozen=True)
class Clustering:
    """Numbered partition of a node set; indices run from 1."""

    clusters: tuple[frozenset[HyperNode], ...]

    @property
    def domain(self) -> range:
        return range(1, len(self.clusters) + 1)

    def __getitem__(self, index: int) -> frozenset[HyperNode]:
        if index not in self.domain:
            raise ValueError(f"unknown cluster index {index}")
        return self.clusters[index - 1]

    def __len__(self) -> int:
        return len(self.clusters)


def extend_cluster(clustering: Clustering, index: int,
                   extra: Iterable[HyperNode]) -> Clustering:
    """Grow cluster ``index`` by ``extra``; other clusters are untouched."""
    if index not in clustering.domain:
        raise ValueError(f"unknown cluster index {index}")
    grown = tuple(
        members | frozenset(extra) if i + 1 == index else members
        for i, members in enumerate(clustering.clusters)
    )
    return Clustering(grown)


def _seed_key(adjacency, node):
    normalised = sum(1 for m in adjacency[node] if len(adjacency[m]) > 1)
    return normalised, min(leaf_nodes(node))


def cluster(nodes: Iterable[HyperNode], graph: Graph) -> Clustering:
    """Partition a connected node set into branch-free clusters.

    Each cluster starts at a node of minimal normalised degree and is grown
    to a fixpoint: an unclustered node joins when some cluster member has a
    normalised degree of at most 2 (or is a plain leaf) next to it. All
    degrees are taken in the context of the unclustered nodes plus the
    cluster under construction; finished clusters are invisible.
    """
    nodes = frozenset(nodes)
    if not nodes:
        raise ValueError("cannot cluster an empty node set")
    if not _is_connected_context(nodes, graph):
        raise ValueError("node set induces a disconnected hypergraph")

    remaining = set(nodes)
    clusters: list[frozenset[HyperNode]] = []
    while remaining:
        adjacency = context_adjacency(remaining, graph)
        seed = min(remaining, key=lambda n: _seed_key(adjacency, n))
        members: set[HyperNode] = {seed}
        remaining.discard(seed)
        while True:
            context = context_adjacency(remaining | members, graph)
            frontier: set[HyperNode] = set()
            for member in members:
                degree = len(context[member])
                normalised = sum(
                    1 for m in context[member] if len(context[m]) > 1)
                if normalised <= 2 or degree == 1:
                    frontier |= {n for n in context[member] if n in remaining}
            if not frontier:
                break
            members |= frontier
            remaining -= frontier
        clusters.append(frozenset(members))
    return Clustering(tuple(clusters))


def hyper_edges(nodes: Iterable[HyperNode],
                graph: Graph) -> frozenset[frozenset[HyperNode]]:
    """Deduplicated unordered pairs of distinct, mutually reachable hypernodes."""
    adjacency = context_adjacency(nodes, graph)
    return frozenset(
        frozenset((a, b)) for a, out in adjacency.items() for b in out
    )


@dataclass(frozen=True)
class ClusterHierarchy:
    """Levels of hypernodes; level 0 is the original node set."""

    levels: tuple[frozenset[HyperNode], ...]

    @property
    def top_level_index(self) -> int:
        return len(self.levels) - 1

    @property
    def level_sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    @property
    def total_stored(self) -> int:
        """Hypernodes stored across all levels, the compilation's footprint."""
        return sum(self.level_sizes)


def _is_tree_level(nodes: frozenset[HyperNode], graph: Graph) -> bool:
    return len(hyper_edges(nodes, graph)) == len(nodes) - 1


def hcluster(graph: Graph) -> ClusterHierarchy:
    """Cluster repeatedly until the induced hypergraph is acyclic
    (edge count = node count - 1)."""
    if not graph.nodes:
        raise ValueError("graph is empty")
    if not graph.is_connected():
        raise ValueError("schema graph not connected")
    levels: list[frozenset[HyperNode]] = [frozenset(graph.nodes)]
    while not _is_tree_level(levels[-1], graph):
        levels.append(frozenset(cluster(levels[-1], graph).clusters))
    return ClusterHierarchy(tuple(levels))


def _hypernode_to_json(node: HyperNode):
    if isinstance(node, str):
        return node
    rendered = [_hypernode_to_json(member) for member in node]
    return sorted(rendered, key=lambda item: min(_json_leaves(item)))


def _json_leaves(item) -> list[str]:
    if isinstance(item, str):
        return [item]
    out: list[str] = []
    for member in item:
        out.extend(_json_leaves(member))
    return out


def _hypernode_from_json(item) -> HyperNode:
    if isinstance(item, str):
        return item
    if isinstance(item, list):
        return frozenset(_hypernode_from_json(member) for member in item)
    raise CompiledHierarchyError(f"invalid hypernode entry {item!r}")


def hierarchy_to_document(hierarchy: ClusterHierarchy, schema_digest: str) -> dict:
    return {
        "format": HIERARCHY_FORMAT,
        "schema_hash": schema_digest,
        "levels": [
            sorted((_hypernode_to_json(node) for node in level),
                   key=lambda item: min(_json_leaves(item)))
            for level in hierarchy.levels
        ],
    }


def dump_hierarchy(hierarchy: ClusterHierarchy, schema_digest: str) -> str:
    doc = hierarchy_to_document(hierarchy, schema_digest)
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def save_hierarchy(hierarchy: ClusterHierarchy, schema_digest: str,
                   path: str | FilePath) -> None:
    FilePath(path).write_text(dump_hierarchy(hierarchy, schema_digest),
                              encoding="utf-8")


def hierarchy_from_document(doc, graph: Graph,
                            schema_digest: str) -> ClusterHierarchy:
    """Rebuild and fully re-validate a stored hierarchy."""
    if not isinstance(doc, dict) or doc.get("format") != HIERARCHY_FORMAT:
        raise CompiledHierarchyError("unrecognised compiled hierarchy document")
    if doc.get("schema_hash") != schema_digest:
        raise CompiledHierarchyError(
            "compiled hierarchy was built from a different schema")
    raw_levels = doc.get("levels")
    if not isinstance(raw_levels, list) or not raw_levels:
        raise CompiledHierarchyError("compiled hierarchy has no levels")
    levels = tuple(
        frozenset(_hypernode_from_json(item) for item in level)
        for level in raw_levels
    )
    _validate_hierarchy(levels, graph)
    return ClusterHierarchy(levels)


def load_hierarchy(path: str | FilePath, graph: Graph,
                   schema_digest: str) -> ClusterHierarchy:
    try:
        doc = json.loads(FilePath(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise CompiledHierarchyError(f"compiled hierarchy is not valid JSON: {exc}")
    return hierarchy_from_document(doc, graph, schema_digest)


def _validate_hierarchy(levels: tuple[frozenset[HyperNode], ...],
                        graph: Graph) -> None:
    if levels[0] != graph.nodes:
        raise CompiledHierarchyError(
            "level 0 of the compiled hierarchy does not match the graph")
    for depth, (below, above) in enumerate(zip(levels, levels[1:]), start=1):
        covered: set[HyperNode] = set()
        for node in above:
            if not isinstance(node, frozenset) or not node:
                raise CompiledHierarchyError(
                    f"level {depth} contains a non-cluster entry")
            if not node <= below:
                raise CompiledHierarchyError(
                    f"level {depth} cluster contains foreign members")
            if covered & node:
                raise CompiledHierarchyError(f"level {depth} clusters overlap")
            covered |= node
        if covered != below:
            raise CompiledHierarchyError(
                f"level {depth} does not cover the level below")
        if len(below) > 2 and len(above) > len(below) - 2:
            raise CompiledHierarchyError(
                f"level {depth} shrinks by fewer than 2 nodes")
    if not _is_tree_level(levels[-1], graph):
        raise CompiledHierarchyError("top level of the hierarchy is not acyclic")
