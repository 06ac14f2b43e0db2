"""Definition-level reference implementations and seeded instance generators.

Nothing here is fast; every check evaluates the defining predicate of the
family directly, interval by interval.  Random instances come from
SplitMix64 so that a seed names the same instance in any language:

* ``next_u64``: ``state += 0x9E3779B97F4A7C15``; then the standard
  SplitMix64 finalizer (xor-shift 30, multiply ``0xBF58476D1CE4E5B9``,
  xor-shift 27, multiply ``0x94D049BB133111EB``, xor-shift 31), mod 2**64.
* ``below(m)``: draw until ``r >= (2**64 - m) % m``, return ``r % m``.
* ``unit()``: ``(next_u64() >> 11) * 2**-53``.
"""
from __future__ import annotations

from collections import deque
from typing import List, Union

from .core import (
    Dag,
    FamilyKind,
    Interval,
    InvalidInputError,
    LabeledTree,
    Permutation,
    Structure,
)
from .decomposition import DecompositionTree, NodeLabel

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, m: int) -> int:
        """Uniform integer in ``[0, m)``."""
        threshold = ((1 << 64) - m) % m
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % m

    def unit(self) -> float:
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def permutation(self, n: int) -> List[int]:
        """Fisher-Yates shuffle of ``1..n``, swapping from the top down."""
        a = list(range(1, n + 1))
        for i in range(n - 1, 0, -1):
            j = self.below(i + 1)
            a[i], a[j] = a[j], a[i]
        return a


def random_permutation(n: int, seed: int) -> Permutation:
    return Permutation(tuple(SplitMix64(seed).permutation(n)))


def random_tree(n: int, seed: int) -> LabeledTree:
    """Vertex ``v`` hangs off a uniform earlier vertex, then labels are shuffled."""
    rng = SplitMix64(seed)
    edges = [(rng.below(v - 1) + 1, v) for v in range(2, n + 1)]
    relabel = [0, *rng.permutation(n)]
    return LabeledTree.of(n, [(relabel[u], relabel[v]) for u, v in edges])


def random_dag(n: int, seed: int, density: float = 0.3) -> Dag:
    """Shuffle a topological order, then keep each forward pair with probability ``density``."""
    rng = SplitMix64(seed)
    order = rng.permutation(n)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.unit() < density:
                arcs.append((order[i], order[j]))
    return Dag.of(n, arcs)


def random_instance(kind: Union[FamilyKind, str], n: int, seed: int, density: float = 0.3) -> Structure:
    if n < 1:
        raise ValueError("n must be at least 1")
    name = kind.structure if isinstance(kind, FamilyKind) else str(kind)
    if name in ("perm", "permutation"):
        return random_permutation(n, seed)
    if name == "tree":
        return random_tree(n, seed)
    if name == "dag":
        return random_dag(n, seed, density)
    raise ValueError(f"unknown structure {kind!r}")


def _perm_family(kind: FamilyKind, p: Permutation) -> List[Interval]:
    P = p.padded()
    n = p.n
    out = []
    for y in range(1, n + 1):
        for x in range(y, 0, -1):
            window = P[x : y + 1]
            lo, hi = min(window), max(window)
            if kind is FamilyKind.A:
                ok = hi - lo == y - x
            elif kind is FamilyKind.B:
                ok = x == y or (lo == x and hi == y)
            elif kind is FamilyKind.C:
                ok = lo == P[x] and hi == P[y]
            else:
                ok = set(window) == set(range(P[x], P[y] + 1))
            if ok:
                out.append(Interval(x, y))
    return out


def _masks(adj, n):
    return [sum(1 << u for u in adj[v]) for v in range(n + 1)]


def _connected(vertices: int, start: int, adjmask) -> bool:
    seen = 1 << start
    frontier = [start]
    while frontier:
        v = frontier.pop()
        new = adjmask[v] & vertices & ~seen
        seen |= new
        while new:
            low = new & -new
            frontier.append(low.bit_length() - 1)
            new ^= low
    return seen == vertices


def _tree_family(kind: FamilyKind, t: LabeledTree) -> List[Interval]:
    n = t.n
    adj = t.adjacency()
    adjmask = _masks(adj, n)
    # path_mask[r][v]: vertices on the r-v path, from a BFS rooted at r
    path_mask = []
    for r in range(n + 1):
        pm = [0] * (n + 1)
        if r:
            pm[r] = 1 << r
            q = deque([r])
            while q:
                v = q.popleft()
                for u in adj[v]:
                    if not pm[u]:
                        pm[u] = pm[v] | (1 << u)
                        q.append(u)
        path_mask.append(pm)

    def on_one_path(vertices, x, y):
        # the minimal subtree spanning the set is a path iff its degrees stay <= 2
        span = 0
        for v in range(x, y + 1):
            span |= path_mask[x][v]
        s = span
        while s:
            low = s & -s
            if (adjmask[low.bit_length() - 1] & span).bit_count() > 2:
                return False
            s ^= low
        return True

    def induced_path(vertices, x, y):
        if not _connected(vertices, x, adjmask):
            return False
        return all((adjmask[v] & vertices).bit_count() <= 2 for v in range(x, y + 1))

    out = []
    for y in range(1, n + 1):
        for x in range(y, 0, -1):
            vertices = ((1 << (y + 1)) - 1) ^ ((1 << x) - 1)
            if kind is FamilyKind.E:
                ok = _connected(vertices, x, adjmask)
            elif kind is FamilyKind.F:
                ok = on_one_path(vertices, x, y)
            else:
                ok = induced_path(vertices, x, y)
            if ok:
                out.append(Interval(x, y))
    return out


def _dag_family(d: Dag) -> List[Interval]:
    n = d.n
    succ = d.successors()
    reach = [0] * (n + 1)
    for v in range(1, n + 1):
        seen = {v}
        q = deque([v])
        while q:
            u = q.popleft()
            for w in succ[u]:
                if w not in seen:
                    seen.add(w)
                    q.append(w)
        reach[v] = sum(1 << w for w in seen)
    out = []
    for y in range(1, n + 1):
        for x in range(y, 0, -1):
            closure = 0
            for v in range(x, y + 1):
                closure |= reach[v]
            interval = ((1 << (y + 1)) - 1) ^ ((1 << x) - 1)
            if x == y or closure == interval:
                out.append(Interval(x, y))
    return out


def brute_force_family(kind: Union[FamilyKind, str], structure: Structure) -> List[Interval]:
    """Every member by direct evaluation, ends ascending then begins descending."""
    kind = FamilyKind(kind)
    expected = {"permutation": Permutation, "tree": LabeledTree, "dag": Dag}[kind.structure]
    if not isinstance(structure, expected):
        raise InvalidInputError(f"kind {kind.value} expects a {kind.structure}")
    if kind.structure == "permutation":
        return _perm_family(kind, structure)
    if kind.structure == "tree":
        return _tree_family(kind, structure)
    return _dag_family(structure)


def overlap_free(members: List[Interval]) -> List[Interval]:
    """Members that overlap no other member."""
    n = max((m.end for m in members), default=0)
    # row[c]: bitmask of ends d with [c, d] a member
    row = [0] * (n + 2)
    col = [0] * (n + 2)
    for c, d in members:
        row[c] |= 1 << d
        col[d] |= 1 << c
    out = []
    for a, b in members:
        inside = ((1 << b) - 1) ^ ((1 << a) - 1)  # bits a..b-1
        if any(row[c] & inside for c in range(1, a)):
            continue
        inside_begin = ((1 << (b + 1)) - 1) ^ ((1 << (a + 1)) - 1)  # bits a+1..b
        if any(col[d] & inside_begin for d in range(b + 1, n + 1)):
            continue
        out.append(Interval(a, b))
    return out


def _quotient_label(children, P) -> NodeLabel:
    lows = [min(P[b : e + 1]) for b, e in (c["pos"] for c in children)]
    ranks = sorted(range(len(lows)), key=lows.__getitem__)
    if ranks == list(range(len(lows))):
        return NodeLabel.INCREASING
    if ranks == list(range(len(lows) - 1, -1, -1)):
        return NodeLabel.DECREASING
    return NodeLabel.PRIME


def brute_force_decomposition(p: Permutation) -> DecompositionTree:
    """Inclusion tree of the overlap-free common intervals, labelled by quotient."""
    P = p.padded()
    strong = overlap_free(_perm_family(FamilyKind.A, p))
    # begins ascending, longer first: every node precedes its descendants
    strong.sort(key=lambda iv: (iv.begin, -iv.end))
    root = None
    path: List[dict] = []
    made = []
    for x, y in strong:
        window = P[x : y + 1]
        node = {"label": NodeLabel.LEAF.value, "pos": [x, y], "val": [min(window), max(window)], "children": []}
        made.append(node)
        while path and path[-1]["pos"][1] < x:
            path.pop()
        if path:
            path[-1]["children"].append(node)
        else:
            root = node
        path.append(node)
    for node in made:
        if node["children"]:
            node["label"] = _quotient_label(node["children"], P).value
    return DecompositionTree.from_dict(root)


def is_closed_under_intersection(members: List[Interval]) -> bool:
    """Every two intersecting members have their intersection as a member."""
    pool = set(members)
    for a in members:
        for b in members:
            lo, hi = max(a.begin, b.begin), min(a.end, b.end)
            if lo <= hi and (lo, hi) not in pool:
                return False
    return True
