"""Linear path expressions: the textual rendering of found paths.

Each step contributes a connector: subtype/polymorphism edges join bare,
a role edge entering its relationship type keeps the role name, and a role
edge leaving it reverses the role (rendered with a trailing ``~``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .graph import Path
from .schema import RESERVED_MARKERS, Schema


@dataclass(frozen=True)
class Connector:
    role: Optional[str]
    reverse: bool = False

    @property
    def is_bare(self) -> bool:
        return self.role is None

    def render(self) -> Optional[str]:
        if self.role is None:
            return None
        return f"{self.role}~" if self.reverse else self.role


Token = Union[str, Connector]


@dataclass(frozen=True)
class PathExpression:
    """Alternating type names and connectors, starting and ending on a name."""

    tokens: tuple[Token, ...]

    def render(self) -> str:
        parts: list[str] = []
        for token in self.tokens:
            if isinstance(token, Connector):
                rendered = token.render()
                if rendered is not None:
                    parts.append(rendered)
            else:
                parts.append(token)
        return " . ".join(parts)

    def __str__(self) -> str:
        return self.render()


def connector(label: str, destination: str, schema: Schema) -> Connector:
    if label in RESERVED_MARKERS:
        return Connector(role=None)
    if destination in schema.rel_types and label in schema.roles[destination]:
        return Connector(role=label, reverse=False)
    return Connector(role=label, reverse=True)


def path_expr(path: Path, schema: Schema) -> PathExpression:
    tokens: list[Token] = [path.nodes[0]]
    for label, node in zip(path.labels, path.nodes[1:]):
        tokens.append(connector(label, node, schema))
        tokens.append(node)
    return PathExpression(tuple(tokens))
