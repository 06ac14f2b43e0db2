"""Interval families of a labelled tree: connected (E), in-a-path (F), path (G).

Path queries go through :class:`MinPathIndex`.  Minimum and maximum labels
on a path come from two Kruskal-style reconstruction trees, in which the
lowest common ancestor of ``x`` and ``y`` is the extreme label on the
``x``-``y`` path.  Distances and on-path tests use depths and LCA in the
original tree rooted at vertex 1.
"""
from __future__ import annotations

from collections import deque
from typing import List, Optional, Sequence

from .core import Generator, LabeledTree, generator_intersect
from .sweep import Sink, SweepOracle, SweepStats, sweep_enumerate, sweep_generator


class LCAIndex:
    """Lowest common ancestors over a rooted forest given by child lists.

    Euler tour plus sparse table: O(n log n) build, O(1) query.
    """

    def __init__(self, children: Sequence[Sequence[int]], root: int):
        size = len(children)
        depth = [0] * size
        first = [0] * size
        euler: List[int] = []
        stack = [(root, 0)]
        # iterative DFS; a vertex is re-emitted after each child returns
        while stack:
            v, i = stack.pop()
            if i == 0:
                first[v] = len(euler)
            euler.append(v)
            kids = children[v]
            if i < len(kids):
                stack.append((v, i + 1))
                c = kids[i]
                depth[c] = depth[v] + 1
                stack.append((c, 0))
        self.depth = depth
        self._first = first
        table = [euler]
        span = 1
        while 2 * span <= len(euler):
            prev = table[-1]
            row = [
                a if depth[a] <= depth[b] else b
                for a, b in zip(prev, prev[span:])
            ]
            table.append(row)
            span *= 2
        self._table = table

    def lca(self, u: int, v: int) -> int:
        i, j = self._first[u], self._first[v]
        if i > j:
            i, j = j, i
        k = (j - i + 1).bit_length() - 1
        row = self._table[k]
        a, b = row[i], row[j - (1 << k) + 1]
        return a if self.depth[a] <= self.depth[b] else b


def _reconstruction_children(adj, n: int, order) -> List[List[int]]:
    """Child lists of the tree where each vertex adopts the components it joins.

    Vertices are activated in ``order``; on activation a vertex becomes the
    parent of the representative of every active neighbour's component.
    """
    rep = list(range(n + 1))
    active = [False] * (n + 1)
    children: List[List[int]] = [[] for _ in range(n + 1)]

    def find(a):
        root = a
        while rep[root] != root:
            root = rep[root]
        while rep[a] != root:
            rep[a], a = root, rep[a]
        return root

    for v in order:
        active[v] = True
        for w in adj[v]:
            if active[w]:
                r = find(w)
                if r != v:
                    children[v].append(r)
                    rep[r] = v
    return children


class MinPathIndex:
    """Constant-time path queries on a labelled tree."""

    def __init__(self, t: LabeledTree):
        n = t.n
        adj = t.adjacency()
        self.n = n
        # activating labels high to low leaves vertex 1 as the root and
        # makes the LCA the minimum on the path
        self._min = LCAIndex(_reconstruction_children(adj, n, range(n, 0, -1)), 1)
        self._max = LCAIndex(_reconstruction_children(adj, n, range(1, n + 1)), n)
        children: List[List[int]] = [[] for _ in range(n + 1)]
        seen = [False] * (n + 1)
        seen[1] = True
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    children[v].append(w)
                    queue.append(w)
        self._tree = LCAIndex(children, 1)

    def _check(self, *vs):
        for v in vs:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside 1..{self.n}")

    def min_on_path(self, x: int, y: int) -> int:
        self._check(x, y)
        return self._min.lca(x, y)

    def max_on_path(self, x: int, y: int) -> int:
        self._check(x, y)
        return self._max.lca(x, y)

    def dist(self, x: int, y: int) -> int:
        d = self._tree.depth
        return d[x] + d[y] - 2 * d[self._tree.lca(x, y)]

    def on_path(self, x: int, y: int, z: int) -> bool:
        """Does ``z`` lie on the ``x``-``y`` path?"""
        return self.dist(x, z) + self.dist(z, y) == self.dist(x, y)

    def aligned(self, a: int, b: int, c: int) -> bool:
        """Do the three vertices lie on one path?"""
        return self.on_path(a, b, c) or self.on_path(c, b, a) or self.on_path(a, c, b)


def build_min_path_index(t: LabeledTree) -> MinPathIndex:
    return MinPathIndex(t)


def min_on_path(idx: MinPathIndex, x: int, y: int) -> int:
    return idx.min_on_path(x, y)


def connected_interval_oracles(idx: MinPathIndex):
    lca_min = idx._min.lca
    lca_max = idx._max.lca
    # x stays while every vertex between x and y is at least x; symmetric on the left
    return (
        SweepOracle(evict_back=lambda x, y: lca_min(x, y) < x),
        SweepOracle(evict_back=lambda y, x: lca_max(x, y) > y),
    )


def connected_interval_generator(
    t: LabeledTree, stats: Optional[SweepStats] = None, idx: Optional[MinPathIndex] = None
) -> Generator:
    """Class E: intervals ``I`` with ``T[I]`` connected."""
    idx = idx or MinPathIndex(t)
    return sweep_generator(t.n, *connected_interval_oracles(idx), stats=stats)


class _PathWindow:
    """Sliding FIFO window of vertices that lie on one tree path.

    Each stored vertex gets a coordinate along the common path, so the two
    ends of the path are the window's minimum and maximum, kept in monotone
    deques.  Arrivals that break the alignment of the ends drop the oldest
    vertices first.
    """

    def __init__(self, idx: MinPathIndex):
        n = idx.n
        self.idx = idx
        self.coord = [0] * (n + 1)
        self.removed = [False] * (n + 1)
        self.fifo: deque = deque()
        self.low: deque = deque()
        self.high: deque = deque()

    def advance(self, y: int):
        idx, coord, fifo, low, high = self.idx, self.coord, self.fifo, self.low, self.high
        while len(fifo) > 1 and not idx.aligned(low[0], y, high[0]):
            v = fifo.popleft()
            self.removed[v] = True
            if low[0] == v:
                low.popleft()
            if high[0] == v:
                high.popleft()
        if not fifo:
            c = 0
        else:
            a, b = low[0], high[0]
            if a == b or idx.on_path(a, b, y):
                c = coord[a] + idx.dist(a, y)
            elif idx.on_path(a, y, b):
                c = coord[b] + idx.dist(b, y)
            else:
                c = coord[a] - idx.dist(a, y)
        coord[y] = c
        fifo.append(y)
        while low and coord[low[-1]] >= c:
            low.pop()
        low.append(y)
        while high and coord[high[-1]] <= c:
            high.pop()
        high.append(y)


def _in_path_oracle(idx: MinPathIndex) -> SweepOracle:
    window = _PathWindow(idx)
    removed = window.removed
    return SweepOracle(advance=window.advance, evict_front=lambda x, y: removed[x], behaviour="deque")


def in_path_generator(
    t: LabeledTree, stats: Optional[SweepStats] = None, idx: Optional[MinPathIndex] = None
) -> Generator:
    """Class F: intervals whose vertices all lie on a single path of ``T``."""
    idx = idx or MinPathIndex(t)
    # the window is direction-agnostic, one fresh copy per sweep
    return sweep_generator(t.n, _in_path_oracle(idx), _in_path_oracle(idx), stats=stats)


def path_interval_generator(
    t: LabeledTree, stats: Optional[SweepStats] = None, idx: Optional[MinPathIndex] = None
) -> Generator:
    """Class G: intervals inducing a simple path, as the meet of E and F."""
    idx = idx or MinPathIndex(t)
    return generator_intersect(
        connected_interval_generator(t, stats, idx), in_path_generator(t, stats, idx)
    )


def enumerate_connected_intervals(t: LabeledTree, sink: Optional[Sink] = None) -> int:
    idx = MinPathIndex(t)
    g = connected_interval_generator(t, idx=idx)
    right, _ = connected_interval_oracles(idx)
    return sweep_enumerate(t.n, right, [l - 1 for l in g.L], sink)


def enumerate_in_path_intervals(t: LabeledTree, sink: Optional[Sink] = None) -> int:
    idx = MinPathIndex(t)
    g = in_path_generator(t, idx=idx)
    return sweep_enumerate(t.n, _in_path_oracle(idx), [l - 1 for l in g.L], sink)


def enumerate_path_intervals(t: LabeledTree, sink: Optional[Sink] = None) -> int:
    # E evicts from the rear, F from the front; both tests are pointwise,
    # so one store serves the intersection
    idx = MinPathIndex(t)
    g = path_interval_generator(t, idx=idx)
    right_e, _ = connected_interval_oracles(idx)
    f = _in_path_oracle(idx)
    combined = SweepOracle(
        evict_back=right_e.evict_back, evict_front=f.evict_front, advance=f.advance, behaviour="deque"
    )
    return sweep_enumerate(t.n, combined, [l - 1 for l in g.L], sink)
