"""Interval families of a permutation: common (A), fixed (B), frame (C), hurdle (D).

Also the simplicity test and the O(n + K) enumeration of common intervals,
both driven by the stack of potential beginnings.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .core import Generator, Interval, Permutation, generator_intersect
from .sweep import Sink, SweepOracle, SweepStats, sweep_generator


@dataclass(frozen=True)
class SideExtrema:
    """Value-nearest neighbours of ``P(x)`` among the values on each side.

    Lists are padded: index ``x`` holds the entry for position ``x`` and
    index 0 is unused.  Empty sets map to ``n + 1`` (greater) and ``0``
    (smaller).
    """

    min_greater_left: List[int]
    max_smaller_left: List[int]
    min_greater_right: List[int]
    max_smaller_right: List[int]


def side_extrema(p: Permutation) -> SideExtrema:
    """All four side extrema in one O(n) pass over the values.

    Walking values upward, ``min_greater_left`` of a position is the first
    larger value sitting further left: a next-smaller-position query, which
    a stack of positions answers.  The mirrored stack gives the right side.
    """
    n = p.n
    P = p.padded()
    where = [0] * (n + 1)
    for k, v in enumerate(p.values, 1):
        where[v] = k
    mgl = [n + 1] * (n + 1)
    msl = [0] * (n + 1)
    mgr = [n + 1] * (n + 1)
    msr = [0] * (n + 1)
    P.append(0)  # P[n + 1] backs the right-hand sentinel
    # positions with increasing (resp. decreasing) value order; sentinels never pop
    low = [0]
    high = [n + 1]
    low_pop, high_pop = low.pop, high.pop
    low_push, high_push = low.append, high.append
    for v in range(1, n + 1):
        q = where[v]
        while low[-1] > q:
            mgl[low_pop()] = v
        msl[q] = P[low[-1]]
        low_push(q)
        while high[-1] < q:
            mgr[high_pop()] = v
        msr[q] = P[high[-1]]
        high_push(q)
    return SideExtrema(mgl, msl, mgr, msr)


def common_interval_oracles(p: Permutation, ext: Optional[SideExtrema] = None) -> Tuple[SweepOracle, SweepOracle]:
    # x stays a potential beginning while no earlier value falls strictly
    # between P(x) and P(y): P(y) must stay inside the gap around P(x)
    ext = ext or side_extrema(p)
    P = p.padded()
    return (
        SweepOracle.window(ext.max_smaller_left, ext.min_greater_left, P),
        SweepOracle.window(ext.max_smaller_right, ext.min_greater_right, P),
    )


def fixed_interval_oracles(p: Permutation) -> Tuple[SweepOracle, SweepOracle]:
    n = p.n
    P = p.padded()
    below = list(range(-1, n))  # x survives while P(y) > x - 1
    above = list(range(1, n + 2))
    never_low = [0] * (n + 1)
    never_high = [n + 1] * (n + 1)
    # x stays while min P([x, y]) >= x; y stays while max P([x, y]) <= y
    return (
        SweepOracle.window(below, never_high, P, dead_on_arrival=lambda y: P[y] < y),
        SweepOracle.window(never_low, above, P, dead_on_arrival=lambda x: P[x] > x),
    )


def frame_interval_oracles(p: Permutation) -> Tuple[SweepOracle, SweepOracle]:
    n = p.n
    P = p.padded()
    return (
        SweepOracle.window([v - 1 for v in P], [n + 1] * (n + 1), P),
        SweepOracle.window([0] * (n + 1), [v + 1 for v in P], P),
    )


def common_interval_generator(p: Permutation, stats: Optional[SweepStats] = None) -> Generator:
    """Generator of the intervals ``I`` such that ``P(I)`` is an interval (class A)."""
    return sweep_generator(p.n, *common_interval_oracles(p), stats=stats)


def fixed_interval_generator(p: Permutation, stats: Optional[SweepStats] = None) -> Generator:
    """Class B: ``P(I) = I``, with every singleton included."""
    return sweep_generator(p.n, *fixed_interval_oracles(p), stats=stats)


def frame_interval_generator(p: Permutation, stats: Optional[SweepStats] = None) -> Generator:
    """Class C: ``P([x, y])`` contained in ``[P(x), P(y)]``."""
    return sweep_generator(p.n, *frame_interval_oracles(p), stats=stats)


def hurdle_generator(p: Permutation, stats: Optional[SweepStats] = None) -> Generator:
    """Class D (hurdles): ``P([x, y]) = [P(x), P(y)]``."""
    return generator_intersect(common_interval_generator(p, stats), frame_interval_generator(p, stats))


def reduce_two_permutations(p1: Permutation, p2: Permutation) -> Permutation:
    """Renumber so that the second permutation becomes the identity.

    ``Q(k)`` is the position in ``p2`` of the element ``p1(k)``; the common
    intervals of ``(p1, p2)`` are the sets ``p1(I)`` with ``Q(I)`` an
    interval.
    """
    if p1.n != p2.n:
        raise ValueError(f"permutation sizes differ: {p1.n} != {p2.n}")
    where = [0] * (p2.n + 1)
    for pos, v in enumerate(p2.values, 1):
        where[v] = pos
    return Permutation(tuple(where[v] for v in p1.values))


def _potbeg_scan(p: Permutation, ext: Optional[SideExtrema] = None):
    """Yield ``(y, stack, min_before, max_before)`` after each update.

    ``min_before[i]`` is the minimum of ``P`` over ``(stack[i-1], stack[i]]``.
    The yielded lists are live and must not be mutated.
    """
    ext = ext or side_extrema(p)
    P = p.padded()
    mgl, msl = ext.min_greater_left, ext.max_smaller_left
    stack: List[int] = []
    mnb: List[int] = []
    mxb: List[int] = []
    for y in range(1, p.n + 1):
        py = P[y]
        mini = maxi = py
        while stack and (mgl[stack[-1]] < py or msl[stack[-1]] > py):
            stack.pop()
            m = mnb.pop()
            if m < mini:
                mini = m
            m = mxb.pop()
            if m > maxi:
                maxi = m
        stack.append(y)
        mnb.append(mini)
        mxb.append(maxi)
        yield y, stack, mnb, mxb


def find_nontrivial_common_interval(p: Permutation) -> Optional[Interval]:
    """First common interval of length strictly between 1 and n, or None.

    Only the potential beginning just below ``y`` needs a look: members
    ending at ``y`` are a suffix of the stack.
    """
    P = p.padded()
    n = p.n
    for y, stack, mnb, mxb in _potbeg_scan(p):
        if len(stack) < 2:
            continue
        x = stack[-2]
        if x == 1 and y == n:
            continue
        px = P[x]
        if max(mxb[-1], px) - min(mnb[-1], px) == y - x:
            return Interval(x, y)
    return None


def is_simple(p: Permutation) -> bool:
    """True when every common interval is trivial; sizes 1 and 2 count as simple."""
    return find_nontrivial_common_interval(p) is None


def enumerate_common_intervals(p: Permutation, sink: Optional[Sink] = None) -> int:
    """Emit all common intervals in O(n + K): ends ascending, begins descending."""
    P = p.padded()
    count = 0
    for y, stack, mnb, mxb in _potbeg_scan(p):
        lo = hi = P[y]
        i = len(stack) - 1
        while i >= 0:
            x = stack[i]
            px = P[x]
            if px < lo:
                lo = px
            if px > hi:
                hi = px
            if hi - lo != y - x:
                break
            count += 1
            if sink is not None:
                sink(x, y)
            if mnb[i] < lo:
                lo = mnb[i]
            if mxb[i] > hi:
                hi = mxb[i]
            i -= 1
    return count
