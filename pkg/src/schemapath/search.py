"""Incremental best-first enumeration of acyclic paths between two points.

Two pools drive the search: open candidates ``pool`` and found solutions
``solutions``. Each increment extends the currently-best candidates by one
edge; a solution is released once nothing cheaper can still appear, so
releases arrive in non-decreasing badness order and already-released sets
only ever grow.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .graph import Graph, Path
from .relevance import RelevanceConfig, badness, best


@dataclass(frozen=True)
class SearchState:
    start: str
    goal: str
    pool: frozenset[Path]
    solutions: frozenset[Path]
    released: frozenset[Path]
    exhausted: bool = False


def start_state(start: str, goal: str, graph: Graph) -> SearchState:
    if start == goal:
        raise ValueError("points must be distinct")
    for point in (start, goal):
        if point not in graph.nodes:
            raise ValueError(f"unknown point {point!r}")
    return SearchState(
        start=start,
        goal=goal,
        pool=frozenset({Path.single(start, graph)}),
        solutions=frozenset(),
        released=frozenset(),
    )


def increment(state: SearchState, cfg: RelevanceConfig, graph: Graph) -> SearchState:
    """One search step: extend the best open candidates by one edge each.

    With an empty pool the search is final: every solution is released and
    the state is marked exhausted.
    """
    if not state.pool:
        return replace(state, released=state.solutions, exhausted=True)

    best_now = best(state.pool, cfg)
    extensions = {
        path.extend(((label, nbr),), graph)
        for path in best_now
        for label, nbr in graph.steps_from(path.end)
        if nbr not in path
    }
    solutions = state.solutions | {p for p in extensions if p.end == state.goal}
    pool = (state.pool | extensions) - best_now - solutions
    cutoff = min((badness(q, cfg) for q in pool), default=None)
    released = frozenset(
        s for s in solutions if cutoff is None or badness(s, cfg) <= cutoff
    )
    return replace(
        state,
        pool=frozenset(pool),
        solutions=frozenset(solutions),
        released=released,
    )


def list_more(state: SearchState, cfg: RelevanceConfig, graph: Graph) -> SearchState:
    """Drive increments until the released set grows or the pool runs dry.

    The first call on a fresh state fills the listbox; every later call is
    one press of MORE. Exhausted states are returned unchanged.
    """
    while True:
        if state.exhausted:
            return state
        nxt = increment(state, cfg, graph)
        if nxt.released != state.released or nxt.exhausted:
            return nxt
        state = nxt


def multi_point(points: Sequence[str], cfg: RelevanceConfig,
                graph: Graph) -> list[SearchState]:
    """One search per consecutive pair of points, each advanced one round."""
    if len(points) < 2:
        raise ValueError("need at least two points")
    for left, right in zip(points, points[1:]):
        if left == right:
            raise ValueError("points must be distinct")
    return [
        list_more(start_state(left, right, graph), cfg, graph)
        for left, right in zip(points, points[1:])
    ]


def release_order(paths, cfg: RelevanceConfig) -> list[Path]:
    """Stable presentation order: by badness, then by the path sequence."""
    return sorted(paths, key=lambda p: (badness(p, cfg), p.seq))
