"""Generic splitter sweeps over a store of potential beginnings (or ends).

A family plugs into the sweep through a :class:`SweepOracle`, a bundle of
constant-time predicates.  The right sweep visits ``y = 1..n`` and evicts
stored vertices that stop being potential beginnings of ``y``; the vertex
being evicted at ``y`` gets ``RSplitter = y``.  The left sweep is the same
loop run over ``x = n..1`` with potential ends, producing ``LSplitter``.

Sentinels: a vertex that is never evicted keeps ``RSplitter = n + 1`` and
``LSplitter = 0``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from .core import Generator

Sink = Callable[[int, int], None]


@dataclass(frozen=True)
class SweepOracle:
    """Family-specific eviction rules for one sweep direction.

    Every predicate receives a stored vertex and the arriving vertex.  A
    predicate left as ``None`` never fires, which lets the engine skip the
    call entirely.

    :param evict_back: must the most recently stored vertex go?
    :param evict_front: must the oldest stored vertex go? (deque behaviour)
    :param dead_on_arrival: is the arriving vertex not even a potential
        beginning of itself?  Such vertices are never stored.
    :param advance: called once with each arriving vertex before any
        eviction test, for oracles that carry their own sliding state.

    Stack oracles whose rear test has the shape "``x`` survives ``y`` iff
    ``lower[x] < key[y] < upper[x]``" can hand over the three tables
    instead (see :meth:`window`); the engine then evaluates them inline.
    """

    evict_back: Optional[Callable[[int, int], bool]] = None
    evict_front: Optional[Callable[[int, int], bool]] = None
    dead_on_arrival: Optional[Callable[[int], bool]] = None
    advance: Optional[Callable[[int], None]] = None
    behaviour: str = "stack"
    tables: Optional[Tuple[Sequence[int], Sequence[int], Sequence[int]]] = None

    @classmethod
    def window(cls, lower, upper, key, dead_on_arrival=None) -> "SweepOracle":
        """Table-driven stack oracle; tables are indexed by vertex (slot 0 unused)."""

        def evict_back(x, y):
            k = key[y]
            return k <= lower[x] or k >= upper[x]

        return cls(evict_back=evict_back, dead_on_arrival=dead_on_arrival, tables=(lower, upper, key))


@dataclass
class SweepStats:
    """Work counters filled in by a sweep."""

    pushes: int = 0
    removals: int = 0
    dead: int = 0

    def add(self, other: "SweepStats"):
        self.pushes += other.pushes
        self.removals += other.removals
        self.dead += other.dead


@dataclass(frozen=True)
class SplitterVectors:
    rsplitter: List[int]
    lsplitter: List[int]

    @property
    def n(self) -> int:
        return len(self.rsplitter)

    def is_member(self, x: int, y: int) -> bool:
        return x > self.lsplitter[y - 1] and y < self.rsplitter[x - 1]


def _sweep(order, size, oracle: SweepOracle, sentinel, step, stats):
    split = [sentinel] * (size + 2)
    store: List[int] = []
    head = 0
    evict_back = oracle.evict_back
    evict_front = oracle.evict_front
    dead = oracle.dead_on_arrival
    advance = oracle.advance
    pop = store.pop
    push = store.append
    removed = 0
    dead_count = 0

    if oracle.tables is not None and evict_front is None and dead is None and advance is None:
        lower, upper, key = oracle.tables
        for y in order:
            k = key[y]
            while store and (k <= lower[store[-1]] or k >= upper[store[-1]]):
                split[pop()] = y
                removed += 1
            push(y)
    elif evict_front is None and dead is None and advance is None and evict_back is not None:
        for y in order:
            while store and evict_back(store[-1], y):
                split[pop()] = y
                removed += 1
            push(y)
    else:
        for y in order:
            if advance is not None:
                advance(y)
            if evict_back is not None:
                while len(store) > head and evict_back(store[-1], y):
                    split[pop()] = y
                    removed += 1
            if evict_front is not None:
                while head < len(store) and evict_front(store[head], y):
                    split[store[head]] = y
                    head += 1
                    removed += 1
            if dead is not None and dead(y):
                split[y] = y + step
                dead_count += 1
                continue
            push(y)

    if stats is not None:
        stats.pushes += size - dead_count
        stats.removals += removed
        stats.dead += dead_count
    return split[1 : size + 1]


def sweep_right_splitters(n: int, oracle: SweepOracle, stats: Optional[SweepStats] = None) -> List[int]:
    """RSplitter of every vertex, as a list indexed by ``x - 1``."""
    return _sweep(range(1, n + 1), n, oracle, n + 1, 1, stats)


def sweep_left_splitters(n: int, oracle: SweepOracle, stats: Optional[SweepStats] = None) -> List[int]:
    """LSplitter of every vertex, as a list indexed by ``y - 1``.

    The oracle speaks in original coordinates: ``evict_back(y, x)`` asks
    whether the stored potential end ``y`` stops being one when ``x``
    arrives.
    """
    return _sweep(range(n, 0, -1), n, oracle, 0, -1, stats)


def splitters_to_generator(s: SplitterVectors) -> Generator:
    return Generator._unchecked(
        s.n,
        tuple(map((-1).__add__, s.rsplitter)),
        tuple(map((1).__add__, s.lsplitter)),
    )


def sweep_generator(
    n: int,
    right: SweepOracle,
    left: SweepOracle,
    stats: Optional[SweepStats] = None,
) -> Generator:
    """Run both sweeps and convert the splitters to a generator."""
    rs = sweep_right_splitters(n, right, stats)
    ls = sweep_left_splitters(n, left, stats)
    return splitters_to_generator(SplitterVectors(rs, ls))


def sweep_enumerate(
    n: int,
    oracle: SweepOracle,
    lsplitter: List[int],
    sink: Optional[Sink] = None,
    stats: Optional[SweepStats] = None,
) -> int:
    """Emit every member of the family, grouped by end, begins descending.

    Replays the right sweep and, for each ``y``, walks the store from its
    rear for as long as the begin clears ``LSplitter[y]``; the members
    ending at ``y`` are exactly that suffix.  Runs in O(n + K).
    """
    evict_back = oracle.evict_back
    evict_front = oracle.evict_front
    dead = oracle.dead_on_arrival
    advance = oracle.advance
    store: List[int] = []
    head = 0
    count = 0
    removed = 0
    dead_count = 0
    for y in range(1, n + 1):
        if advance is not None:
            advance(y)
        if evict_back is not None:
            while len(store) > head and evict_back(store[-1], y):
                store.pop()
                removed += 1
        if evict_front is not None:
            while head < len(store) and evict_front(store[head], y):
                head += 1
                removed += 1
        if dead is not None and dead(y):
            dead_count += 1
            count += 1
            if sink is not None:
                sink(y, y)
        else:
            store.append(y)
        bound = lsplitter[y - 1]
        i = len(store) - 1
        if sink is None:
            while i >= head and store[i] > bound:
                i -= 1
            count += len(store) - 1 - i
        else:
            while i >= head and store[i] > bound:
                sink(store[i], y)
                i -= 1
                count += 1
    if stats is not None:
        stats.pushes += n - dead_count
        stats.removals += removed
        stats.dead += dead_count
    return count
