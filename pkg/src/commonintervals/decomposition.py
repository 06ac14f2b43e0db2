"""Labelled decomposition tree of the common intervals of a permutation.

Nodes are the overlap-free common intervals.  Each internal node is labelled
Increasing, Decreasing or Prime according to how its children's value
ranges are ordered, which is enough to recover every common interval.

The tree is stored flat: node ids ``1..n`` are the leaves (position ``k``),
ids above ``n`` are internal nodes.  :class:`DecompositionNode` is a
lightweight view over those arrays.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence

from .core import Interval, Permutation
from .sweep import Sink


class NodeLabel(str, enum.Enum):
    LEAF = "Leaf"
    INCREASING = "Increasing"
    DECREASING = "Decreasing"
    PRIME = "Prime"


# compact codes used by the builder
LEAF, INC, DEC, PRIME = 0, 1, 2, 3
_LABELS = (NodeLabel.LEAF, NodeLabel.INCREASING, NodeLabel.DECREASING, NodeLabel.PRIME)
_CODES = {label: code for code, label in enumerate(_LABELS)}


class DecompositionTree:
    """Flat storage for the tree of a size-``n`` permutation.

    :param values: the permutation values, leaf ``k`` spans value ``values[k-1]``
    :param labels, begins, ends, lows, highs, children: one entry per
        internal node, in creation order; children are node ids.
    :param root: id of the root node
    """

    def __init__(self, values: Sequence[int], labels, begins, ends, lows, highs, children, root: int):
        self.n = len(values)
        self.values = tuple(values)
        self._labels = labels
        self._begins = begins
        self._ends = ends
        self._lows = lows
        self._highs = highs
        self._children = children
        self.root_id = root

    @property
    def root(self) -> "DecompositionNode":
        return DecompositionNode(self, self.root_id)

    def node(self, node_id: int) -> "DecompositionNode":
        return DecompositionNode(self, node_id)

    def children_of(self, node_id: int) -> List[int]:
        if node_id <= self.n:
            return []
        return self._children[node_id - self.n - 1]

    def record(self, node_id: int):
        """``(label, begin, end, lo, hi)`` of a node."""
        if node_id <= self.n:
            v = self.values[node_id - 1]
            return (NodeLabel.LEAF, node_id, node_id, v, v)
        i = node_id - self.n - 1
        return (_LABELS[self._labels[i]], self._begins[i], self._ends[i], self._lows[i], self._highs[i])

    def preorder_ids(self) -> Iterator[int]:
        stack = [self.root_id]
        n = self.n
        kids = self._children
        while stack:
            u = stack.pop()
            yield u
            if u > n:
                stack.extend(reversed(kids[u - n - 1]))

    def postorder_ids(self) -> List[int]:
        # preorder with children pushed left to right, reversed
        out = []
        stack = [self.root_id]
        n = self.n
        kids = self._children
        while stack:
            u = stack.pop()
            out.append(u)
            if u > n:
                stack.extend(kids[u - n - 1])
        out.reverse()
        return out

    def nodes(self) -> Iterator["DecompositionNode"]:
        for u in self.preorder_ids():
            yield DecompositionNode(self, u)

    def internal_count(self) -> int:
        return len(self._labels)

    def _key(self):
        return [(*self.record(u), len(self.children_of(u))) for u in self.preorder_ids()]

    def __eq__(self, other):
        if not isinstance(other, DecompositionTree):
            return NotImplemented
        return self.n == other.n and self._key() == other._key()

    __hash__ = None

    def to_dict(self) -> Dict:
        """Nested ``{label, pos, val, children}`` records, left to right."""
        made: Dict[int, Dict] = {}
        for u in self.postorder_ids():
            label, b, e, lo, hi = self.record(u)
            made[u] = {
                "label": label.value,
                "pos": [b, e],
                "val": [lo, hi],
                "children": [made.pop(c) for c in self.children_of(u)],
            }
        return made[self.root_id]

    @classmethod
    def from_dict(cls, data: Dict) -> "DecompositionTree":
        n = data["pos"][1] - data["pos"][0] + 1
        values = [0] * n
        labels, begins, ends, lows, highs, children = [], [], [], [], [], []
        # ids are assigned after the walk, once the leaf count is known
        order = []
        stack = [data]
        while stack:
            d = stack.pop()
            order.append(d)
            stack.extend(reversed(d["children"]))
        ids: Dict[int, int] = {}
        for d in order:
            if not d["children"]:
                k = d["pos"][0]
                values[k - 1] = d["val"][0]
                ids[id(d)] = k
            else:
                ids[id(d)] = n + 1 + len(labels)
                labels.append(_CODES[NodeLabel(d["label"])])
                begins.append(d["pos"][0])
                ends.append(d["pos"][1])
                lows.append(d["val"][0])
                highs.append(d["val"][1])
                children.append(None)
        for d in order:
            if d["children"]:
                children[ids[id(d)] - n - 1] = [ids[id(c)] for c in d["children"]]
        return cls(values, labels, begins, ends, lows, highs, children, ids[id(data)])

    def to_dot(self) -> str:
        lines = ["digraph decomposition {", "  node [shape=box];"]
        for u in self.preorder_ids():
            label, b, e, lo, hi = self.record(u)
            if label is NodeLabel.LEAF:
                text = f"{b} (P={lo})"
            else:
                text = f"{label.value}\\npos [{b},{e}]\\nval [{lo},{hi}]"
            lines.append(f'  n{u} [label="{text}"];')
        for u in self.preorder_ids():
            for c in self.children_of(u):
                lines.append(f"  n{u} -> n{c};")
        lines.append("}")
        return "\n".join(lines) + "\n"


class DecompositionNode:
    """View of one node: position range ``[begin, end]``, values ``[lo, hi]``."""

    __slots__ = ("tree", "id")

    def __init__(self, tree: DecompositionTree, node_id: int):
        self.tree = tree
        self.id = node_id

    @property
    def label(self) -> NodeLabel:
        return self.tree.record(self.id)[0]

    @property
    def position_range(self) -> Interval:
        _, b, e, _, _ = self.tree.record(self.id)
        return Interval(b, e)

    @property
    def value_range(self):
        _, _, _, lo, hi = self.tree.record(self.id)
        return (lo, hi)

    @property
    def children(self) -> List["DecompositionNode"]:
        return [DecompositionNode(self.tree, c) for c in self.tree.children_of(self.id)]

    @property
    def is_leaf(self) -> bool:
        return self.id <= self.tree.n

    def __repr__(self):
        label, b, e, _, _ = self.tree.record(self.id)
        return f"{label.value}[{b},{e}]"


@dataclass
class TreeStats:
    extensions: int = 0
    primes: int = 0
    evictions: int = 0
    # extension fired while the rear node and A carried the same linear label
    invariant_violations: int = 0

    @property
    def operations(self) -> int:
        return self.extensions + self.primes


def _left_extrema(P: List[int], n: int):
    """min_greater_left / max_smaller_left only; see perm.side_extrema."""
    where = [0] * (n + 1)
    for k in range(1, n + 1):
        where[P[k]] = k
    mgl = [n + 1] * (n + 1)
    msl = [0] * (n + 1)
    low = [0]
    pop, push = low.pop, low.append
    for v in range(1, n + 1):
        q = where[v]
        while low[-1] > q:
            mgl[pop()] = v
        msl[q] = P[low[-1]]
        push(q)
    return mgl, msl


def build_decomposition_tree(p: Permutation, stats: Optional[TreeStats] = None) -> DecompositionTree:
    """Build the decomposition tree left to right in O(n).

    The forest ``<A_1, ..., A_p | A>`` grows one leaf at a time; after each
    arrival it contracts while a monotonic extension (preferred) or a prime
    node creation applies.

    Prime candidates come from the stack of potential beginnings, pruned to
    positions that still start a tree of the forest.  ``rmin[i]`` and
    ``rmax[i]`` hold the value extremes over ``starts[i] .. starts[i+1]-1``
    (the top region runs to the current position), so the span test for
    the entry just below the top costs O(1).
    """
    n = p.n
    P = p.padded()
    mgl, msl = _left_extrema(P, n)
    base = n + 1
    labels: List[int] = []
    begins: List[int] = []
    ends: List[int] = []
    lows: List[int] = []
    highs: List[int] = []
    kids: List[List[int]] = []
    # forest stack, one entry per tree
    f_id: List[int] = []
    f_beg: List[int] = []
    f_lo: List[int] = []
    f_hi: List[int] = []
    f_lab: List[int] = []
    starts: List[int] = []
    rmin: List[int] = []
    rmax: List[int] = []
    extensions = primes = evictions = violations = 0

    for y in range(1, n + 1):
        py = P[y]
        # position 1 is never evicted, so a region below always exists
        while len(starts) > 1 and (mgl[starts[-1]] < py or msl[starts[-1]] > py):
            starts.pop()
            m = rmin.pop()
            M = rmax.pop()
            if m < rmin[-1]:
                rmin[-1] = m
            if M > rmax[-1]:
                rmax[-1] = M
            evictions += 1
        starts.append(y)
        rmin.append(py)
        rmax.append(py)
        a_id, a_beg, a_lo, a_hi, a_lab = y, y, py, py, LEAF

        while True:
            lab = LEAF
            if f_id:
                b_lo = f_lo[-1]
                b_hi = f_hi[-1]
                if b_hi + 1 == a_lo:
                    lab = INC
                elif a_hi + 1 == b_lo:
                    lab = DEC
            if lab:
                # monotonic extension: A swallows the rear tree
                b_id = f_id.pop()
                b_beg = f_beg.pop()
                f_lo.pop()
                f_hi.pop()
                b_lab = f_lab.pop()
                lo = a_lo if a_lo < b_lo else b_lo
                hi = a_hi if a_hi > b_hi else b_hi
                if b_lab == lab:
                    if a_lab == lab:
                        violations += 1
                    i = b_id - base
                    kids[i].append(a_id)
                    ends[i] = y
                    lows[i] = lo
                    highs[i] = hi
                    a_id = b_id
                else:
                    kids.append([b_id, a_id])
                    a_id = base + len(labels)
                    labels.append(lab)
                    begins.append(b_beg)
                    ends.append(y)
                    lows.append(lo)
                    highs.append(hi)
                a_beg, a_lo, a_hi, a_lab = b_beg, lo, hi, lab
                extensions += 1
            else:
                if len(starts) < 2:
                    break
                x = starts[-2]
                lo = rmin[-2] if rmin[-2] < rmin[-1] else rmin[-1]
                hi = rmax[-2] if rmax[-2] > rmax[-1] else rmax[-1]
                if hi - lo != y - x:
                    break
                # prime creation over every tree from the one starting at x
                k = len(f_beg) - 1
                while f_beg[k] > x:
                    k -= 1
                children = f_id[k:]
                children.append(a_id)
                del f_id[k:], f_beg[k:], f_lo[k:], f_hi[k:], f_lab[k:]
                a_id = base + len(labels)
                labels.append(PRIME)
                begins.append(x)
                ends.append(y)
                lows.append(lo)
                highs.append(hi)
                kids.append(children)
                a_beg, a_lo, a_hi, a_lab = x, lo, hi, PRIME
                primes += 1
            # the top region now lies inside A
            starts.pop()
            m = rmin.pop()
            M = rmax.pop()
            if m < rmin[-1]:
                rmin[-1] = m
            if M > rmax[-1]:
                rmax[-1] = M
        f_id.append(a_id)
        f_beg.append(a_beg)
        f_lo.append(a_lo)
        f_hi.append(a_hi)
        f_lab.append(a_lab)

    if stats is not None:
        stats.extensions += extensions
        stats.primes += primes
        stats.evictions += evictions
        stats.invariant_violations += violations
    assert len(f_id) == 1, "the whole range is always a common interval"
    return DecompositionTree(p.values, labels, begins, ends, lows, highs, kids, f_id[0])


class ConstructionState:
    """Step-by-step form of :func:`build_decomposition_tree`.

    Same state and the same rules, with each operation exposed on its own so
    that configurations can be inspected between steps.  Usage::

        s = ConstructionState(p)
        for y in range(1, p.n + 1):
            s.arrive(y)
            while s.try_extension() or s.try_prime_creation():
                pass
            s.commit()
        tree = s.finish()
    """

    def __init__(self, p: Permutation, stats: Optional[TreeStats] = None):
        self.n = p.n
        self.values = p.values
        self.P = p.padded()
        self.mgl, self.msl = _left_extrema(self.P, self.n)
        self.stats = stats if stats is not None else TreeStats()
        self.labels: List[int] = []
        self.begins: List[int] = []
        self.ends: List[int] = []
        self.lows: List[int] = []
        self.highs: List[int] = []
        self.kids: List[List[int]] = []
        # forest rows: (id, begin, lo, hi, label)
        self.forest: List[tuple] = []
        self.starts: List[int] = []
        self.rmin: List[int] = []
        self.rmax: List[int] = []
        self.current: Optional[tuple] = None
        self.y = 0

    def _fold_top_start(self):
        self.starts.pop()
        m, M = self.rmin.pop(), self.rmax.pop()
        self.rmin[-1] = min(self.rmin[-1], m)
        self.rmax[-1] = max(self.rmax[-1], M)

    def _new_node(self, label, begin, lo, hi, children) -> int:
        node_id = self.n + 1 + len(self.labels)
        self.labels.append(label)
        self.begins.append(begin)
        self.ends.append(self.y)
        self.lows.append(lo)
        self.highs.append(hi)
        self.kids.append(children)
        return node_id

    def arrive(self, y: int):
        """Prune the potential beginnings for ``y`` and make leaf ``y`` the current tree."""
        assert self.current is None and y == self.y + 1
        self.y = y
        py = self.P[y]
        while len(self.starts) > 1 and (self.mgl[self.starts[-1]] < py or self.msl[self.starts[-1]] > py):
            self._fold_top_start()
            self.stats.evictions += 1
        self.starts.append(y)
        self.rmin.append(py)
        self.rmax.append(py)
        self.current = (y, y, py, py, LEAF)

    def try_extension(self) -> bool:
        """Merge the rear tree into the current one when their values are adjacent."""
        if not self.forest:
            return False
        a_id, _, a_lo, a_hi, a_lab = self.current
        b_id, b_beg, b_lo, b_hi, b_lab = self.forest[-1]
        if b_hi + 1 == a_lo:
            lab = INC
        elif a_hi + 1 == b_lo:
            lab = DEC
        else:
            return False
        self.forest.pop()
        lo, hi = min(a_lo, b_lo), max(a_hi, b_hi)
        if b_lab == lab:
            if a_lab == lab:
                self.stats.invariant_violations += 1
            i = b_id - self.n - 1
            self.kids[i].append(a_id)
            self.ends[i] = self.y
            self.lows[i], self.highs[i] = lo, hi
            node_id = b_id
        else:
            node_id = self._new_node(lab, b_beg, lo, hi, [b_id, a_id])
        self.current = (node_id, b_beg, lo, hi, lab)
        self.stats.extensions += 1
        self._fold_top_start()
        return True

    def try_prime_creation(self) -> bool:
        """Close a prime node over the trees from the potential beginning below the top."""
        if len(self.starts) < 2:
            return False
        x = self.starts[-2]
        lo = min(self.rmin[-2:])
        hi = max(self.rmax[-2:])
        if hi - lo != self.y - x:
            return False
        k = len(self.forest) - 1
        while self.forest[k][1] > x:
            k -= 1
        children = [row[0] for row in self.forest[k:]] + [self.current[0]]
        del self.forest[k:]
        node_id = self._new_node(PRIME, x, lo, hi, children)
        self.current = (node_id, x, lo, hi, PRIME)
        self.stats.primes += 1
        self._fold_top_start()
        return True

    def commit(self):
        """Push the current tree onto the forest."""
        self.forest.append(self.current)
        self.current = None

    def finish(self) -> DecompositionTree:
        assert self.y == self.n and self.current is None and len(self.forest) == 1
        return DecompositionTree(
            self.values, self.labels, self.begins, self.ends, self.lows, self.highs, self.kids, self.forest[0][0]
        )


def try_extension(state: ConstructionState) -> bool:
    return state.try_extension()


def try_prime_creation(state: ConstructionState) -> bool:
    return state.try_prime_creation()


def node_quotient(t: DecompositionTree, node: DecompositionNode) -> Permutation:
    """Rank of each child's value range among its siblings."""
    if node.is_leaf:
        raise ValueError("a leaf has no quotient")
    lows = [t.record(c)[3] for c in t.children_of(node.id)]
    order = sorted(range(len(lows)), key=lows.__getitem__)
    ranks = [0] * len(order)
    for r, i in enumerate(order, 1):
        ranks[i] = r
    return Permutation(tuple(ranks))


def expand_family(t: DecompositionTree, sink: Optional[Sink] = None) -> int:
    """Emit every common interval represented by the tree.

    Members are the node ranges plus, under a linear node, every run of at
    least two consecutive children.  Order: ends ascending, begins
    descending.
    """
    n = t.n
    buckets: List[List[int]] = [[] for _ in range(n + 1)]
    # postorder puts deeper contributions first, and those have larger begins
    for u in t.postorder_ids():
        if u <= n:
            buckets[u].append(u)
            continue
        label, begin, end, _, _ = t.record(u)
        if label is NodeLabel.PRIME:
            buckets[end].append(begin)
            continue
        spans = [t.record(c)[1:3] for c in t.children_of(u)]
        for j in range(1, len(spans)):
            bucket = buckets[spans[j][1]]
            for i in range(j - 1, -1, -1):
                bucket.append(spans[i][0])
    count = 0
    for y in range(1, n + 1):
        count += len(buckets[y])
        if sink is not None:
            for x in buckets[y]:
                sink(x, y)
    return count
