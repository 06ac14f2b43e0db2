"""Closed intervals of a DAG (class H).

``[x, y]`` is closed when every vertex reachable from it has a label in
``[x, y]``.  Singletons always count, even when they have out-arcs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .core import Dag, Generator
from .sweep import Sink, SweepOracle, SweepStats, sweep_enumerate, sweep_generator


@dataclass(frozen=True)
class ReachExtrema:
    """Smallest and largest label reachable from each vertex (itself included).

    Padded lists, index 0 unused.
    """

    min_below: List[int]
    max_below: List[int]


def reach_extrema(d: Dag) -> ReachExtrema:
    n = d.n
    succ = d.successors()
    lo = list(range(n + 1))
    hi = list(range(n + 1))
    for v in reversed(d.topological_order()):
        for w in succ[v]:
            if lo[w] < lo[v]:
                lo[v] = lo[w]
            if hi[w] > hi[v]:
                hi[v] = hi[w]
    return ReachExtrema(lo, hi)


def closed_interval_oracles(d: Dag, ext: Optional[ReachExtrema] = None):
    ext = ext or reach_extrema(d)
    n = d.n
    lo, hi = ext.min_below, ext.max_below
    # x stays while nothing reached from [x, y] lies below x;
    # a vertex reaching below itself never starts a longer member
    return (
        SweepOracle.window(
            list(range(-1, n)), [n + 1] * (n + 1), lo, dead_on_arrival=lambda y: lo[y] < y
        ),
        SweepOracle.window(
            [0] * (n + 1), list(range(1, n + 2)), hi, dead_on_arrival=lambda x: hi[x] > x
        ),
    )


def closed_interval_generator(d: Dag, stats: Optional[SweepStats] = None) -> Generator:
    """Class H generator, O(n + m)."""
    return sweep_generator(d.n, *closed_interval_oracles(d), stats=stats)


def enumerate_closed_intervals(d: Dag, sink: Optional[Sink] = None) -> int:
    right, left = closed_interval_oracles(d)
    g = sweep_generator(d.n, right, left)
    return sweep_enumerate(d.n, right, [l - 1 for l in g.L], sink)
