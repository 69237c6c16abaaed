"""Path badness scoring and best-candidate selection.

Badness is a penalty score: every node on a path contributes its deviation
from the schema's maximum conceptual weight, blended with a fixed length
penalty through the user constant ``c_weight`` in [0, 1]. Arithmetic is
exact (fractions) so ties compare reliably.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Set

from .graph import Path
from .schema import Schema

#: Strictness margin: with c_weight = 1 a node at maximum weight would add
#: nothing to a path's badness, breaking the strict growth the incremental
#: search relies on, so the effective c_weight is capped at 1 - 1/1024.
STRICTNESS_EPSILON = Fraction(1, 1024)
DEFAULT_C_WEIGHT = Fraction(1, 2)


def coerce_c_weight(value) -> Fraction:
    """Accept int, float, Fraction, or strings like '0.3' and '1/3'."""
    if isinstance(value, Fraction):
        c = value
    elif isinstance(value, int):
        c = Fraction(value)
    elif isinstance(value, float):
        c = Fraction(str(value))
    elif isinstance(value, str):
        c = Fraction(value)
    else:
        raise ValueError(f"cannot interpret c_weight {value!r}")
    if not 0 <= c <= 1:
        raise ValueError(f"c_weight must lie in [0, 1], got {value!r}")
    return c


@dataclass(frozen=True)
class RelevanceConfig:
    """Scoring parameters: the blend constant, the cached maximum weight,
    and the per-node weights the score reads."""

    c_weight: Fraction
    max_cweight: int
    node_weights: tuple[tuple[str, int], ...]

    @classmethod
    def for_schema(cls, schema: Schema, c_weight=DEFAULT_C_WEIGHT) -> "RelevanceConfig":
        weights = tuple(sorted(schema.cweight.items()))
        return cls(
            c_weight=coerce_c_weight(c_weight),
            max_cweight=max(schema.cweight.values()),
            node_weights=weights,
        )

    @cached_property
    def weight_of(self) -> dict[str, int]:
        return dict(self.node_weights)

    @cached_property
    def effective_max(self) -> int:
        # All-zero weights would zero every contribution; treat the maximum
        # as 1 so scoring degrades to plain node counting.
        return max(self.max_cweight, 1)

    @cached_property
    def effective_c_weight(self) -> Fraction:
        attained = any(w == self.effective_max for _, w in self.node_weights)
        if self.c_weight == 1 and attained:
            return 1 - STRICTNESS_EPSILON
        return self.c_weight

    def node_contribution(self, node: str) -> Fraction:
        c = self.effective_c_weight
        top = self.effective_max
        return c * (top - self.weight_of[node]) + (1 - c) * top


@lru_cache(maxsize=131072)
def _node_set_badness(nodes: frozenset[str], cfg: RelevanceConfig) -> Fraction:
    total = Fraction(0)
    for node in nodes:
        total += cfg.node_contribution(node)
    return total


def badness(path: Path, cfg: RelevanceConfig) -> Fraction:
    """Total penalty of an acyclic path; depends only on its node set."""
    return _node_set_badness(frozenset(path.nodes), cfg)


def best(pool: Set[Path] | Iterable[Path], cfg: RelevanceConfig) -> frozenset[Path]:
    """All paths attaining the minimum badness in ``pool``; ties are kept."""
    pool = frozenset(pool)
    if not pool:
        raise ValueError("empty pool")
    lowest = min(badness(p, cfg) for p in pool)
    return frozenset(p for p in pool if badness(p, cfg) == lowest)
