"""Undirected labelled graph derived from a schema, and paths through it."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import SchemaSemanticError
from .schema import POLY_MARKER, SPEC_MARKER, Schema


@dataclass(frozen=True)
class Edge:
    """Unordered pair of distinct nodes plus a label.

    The label is a role name for role edges, or one of the SPEC/POLY markers.
    Edge identity is (endpoint pair, label), so parallel edges with different
    labels coexist.
    """

    endpoints: frozenset[str]
    label: str

    def __post_init__(self) -> None:
        if len(self.endpoints) != 2:
            raise SchemaSemanticError(
                f"degenerate edge {sorted(self.endpoints)!r}: an edge needs two "
                f"distinct endpoints")

    def other(self, node: str) -> str:
        a, b = sorted(self.endpoints)
        return b if node == a else a


@dataclass(frozen=True)
class Graph:
    nodes: frozenset[str]
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        for edge in self.edges:
            if not edge.endpoints <= self.nodes:
                raise SchemaSemanticError(
                    f"edge {sorted(edge.endpoints)!r} references unknown nodes")

    @cached_property
    def _adjacency(self) -> dict[str, tuple[tuple[str, str], ...]]:
        steps: dict[str, list[tuple[str, str]]] = {node: [] for node in self.nodes}
        for edge in self.edges:
            x, y = sorted(edge.endpoints)
            steps[x].append((edge.label, y))
            steps[y].append((edge.label, x))
        return {node: tuple(sorted(out)) for node, out in steps.items()}

    @cached_property
    def edge_pairs(self) -> tuple[tuple[str, str], ...]:
        """Deduplicated endpoint pairs, each as a sorted 2-tuple."""
        return tuple(sorted({tuple(sorted(e.endpoints)) for e in self.edges}))

    def steps_from(self, node: str) -> tuple[tuple[str, str], ...]:
        """(label, neighbour) steps leaving ``node``, in a stable order."""
        return self._adjacency[node]

    def neighbors(self, node: str) -> tuple[str, ...]:
        return tuple(sorted({nbr for _, nbr in self._adjacency[node]}))

    def has_edge(self, x: str, y: str, label: str) -> bool:
        return Edge(frozenset((x, y)), label) in self.edges

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        start = min(self.nodes)
        seen = {start}
        frontier = [start]
        while frontier:
            node = frontier.pop()
            for nbr in self.neighbors(node):
                if nbr not in seen:
                    seen.add(nbr)
                    frontier.append(nbr)
        return seen == self.nodes

    def adjacency_listing(self) -> str:
        """Debug rendering, one line per node with its labelled steps."""
        lines = []
        for node in sorted(self.nodes):
            steps = ", ".join(
                f"{label}->{nbr}" for label, nbr in self.steps_from(node))
            lines.append(f"{node}: {steps}".rstrip())
        return "\n".join(lines)


def derive_graph(schema: Schema) -> Graph:
    """Build the labelled graph: one node per type, one edge per role plus
    one SPEC/POLY edge per subtype/polymorphism pair."""
    edges: set[Edge] = set()
    for role in schema.preds:
        base = schema.player[role]
        owner = schema.rel(role)
        if base == owner:
            raise SchemaSemanticError(
                f"degenerate edge: role {role!r} would loop {owner!r} onto itself")
        edges.add(Edge(frozenset((base, owner)), role))
    for sub, sup in schema.subtype_pairs:
        if sub == sup:
            raise SchemaSemanticError(
                f"degenerate edge: subtype pair loops {sub!r} onto itself")
        edges.add(Edge(frozenset((sub, sup)), SPEC_MARKER))
    for first, second in schema.poly_pairs:
        if first == second:
            raise SchemaSemanticError(
                f"degenerate edge: poly pair loops {first!r} onto itself")
        edges.add(Edge(frozenset((first, second)), POLY_MARKER))
    return Graph(nodes=frozenset(schema.types), edges=frozenset(edges))


@dataclass(frozen=True)
class Path:
    """Alternating node/label sequence ``[x0, l1, x1, ..., ln, xn]``.

    Structural shape is checked here; edge validity is checked by the
    constructors (:meth:`single`, :meth:`extend`) against a graph.
    """

    nodes: tuple[str, ...]
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.nodes) == 0 or len(self.labels) != len(self.nodes) - 1:
            raise ValueError("a path is a non-empty alternating node/label sequence")

    @classmethod
    def single(cls, node: str, graph: Graph) -> "Path":
        if node not in graph.nodes:
            raise ValueError(f"unknown node {node!r}")
        return cls((node,), ())

    @property
    def begin(self) -> str:
        return self.nodes[0]

    @property
    def end(self) -> str:
        return self.nodes[-1]

    @property
    def length(self) -> int:
        return len(self.labels)

    def __contains__(self, node: str) -> bool:
        return node in self.nodes

    @property
    def is_acyclic(self) -> bool:
        return len(set(self.nodes)) == len(self.nodes)

    @cached_property
    def seq(self) -> tuple[str, ...]:
        """Interleaved node/label sequence; total order for deterministic output."""
        out = [self.nodes[0]]
        for label, node in zip(self.labels, self.nodes[1:]):
            out.append(label)
            out.append(node)
        return tuple(out)

    def extend(self, steps: Sequence[tuple[str, str]], graph: Graph) -> "Path":
        """Concatenate (label, node) steps; every step must be a graph edge."""
        nodes = list(self.nodes)
        labels = list(self.labels)
        for label, node in steps:
            if not graph.has_edge(nodes[-1], node, label):
                raise ValueError(
                    f"no edge {label!r} between {nodes[-1]!r} and {node!r}")
            labels.append(label)
            nodes.append(node)
        return Path(tuple(nodes), tuple(labels))

    def is_valid(self, graph: Graph) -> bool:
        if any(node not in graph.nodes for node in self.nodes):
            return False
        return all(
            graph.has_edge(x, y, label)
            for x, y, label in zip(self.nodes, self.nodes[1:], self.labels)
        )

    def __str__(self) -> str:
        return "[" + ",".join(self.seq) + "]"
