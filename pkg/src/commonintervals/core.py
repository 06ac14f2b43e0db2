"""Ground types shared by every interval family, and generator-level operations.

All vertex indices are 1-based at this interface.  Sequences stored on the
types (``Generator.R``, ``Permutation.values``, ...) are ordinary Python
tuples, so ``g.R[x - 1]`` is the right bound of vertex ``x``.
"""
from __future__ import annotations

import enum
import graphlib
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Sequence, Tuple, Union


class InvalidInputError(ValueError):
    """Raised when a ground structure or parsed input is malformed."""


class Interval(NamedTuple):
    begin: int
    end: int

    def __str__(self):
        return f"{self.begin} {self.end}"


class FamilyKind(str, enum.Enum):
    A = "A"  # common: P(I) is an interval
    B = "B"  # fixed: P(I) = I
    C = "C"  # frame: P([x,y]) within [P(x), P(y)]
    D = "D"  # hurdle: P([x,y]) = [P(x), P(y)]
    E = "E"  # tree-connected
    F = "F"  # tree-in-path
    G = "G"  # tree-path
    H = "H"  # dag-closed

    @property
    def structure(self) -> str:
        if self in PERMUTATION_KINDS:
            return "permutation"
        if self in TREE_KINDS:
            return "tree"
        return "dag"


PERMUTATION_KINDS = frozenset({FamilyKind.A, FamilyKind.B, FamilyKind.C, FamilyKind.D})
TREE_KINDS = frozenset({FamilyKind.E, FamilyKind.F, FamilyKind.G})


@dataclass(frozen=True)
class Generator:
    """Linear-space representation ``(L, R)`` of an intersection-closed family.

    ``[x, y]`` is a member iff ``R[x] >= y`` and ``L[y] <= x``.
    """

    n: int
    R: Tuple[int, ...]
    L: Tuple[int, ...]

    def __post_init__(self):
        if len(self.R) != self.n or len(self.L) != self.n:
            raise InvalidInputError(
                f"generator vectors must have length n={self.n}, "
                f"got {len(self.R)} and {len(self.L)}"
            )
        for i, (r, l) in enumerate(zip(self.R, self.L)):
            v = i + 1
            if not v <= r <= self.n:
                raise InvalidInputError(f"R[{v}]={r} outside [{v}, {self.n}]")
            if not 1 <= l <= v:
                raise InvalidInputError(f"L[{v}]={l} outside [1, {v}]")

    @classmethod
    def from_lists(cls, R: Sequence[int], L: Sequence[int]) -> "Generator":
        return cls(len(R), tuple(R), tuple(L))

    @classmethod
    def _unchecked(cls, n: int, R: Tuple[int, ...], L: Tuple[int, ...]) -> "Generator":
        # Sweep outputs satisfy the bounds by construction; skips the O(n) check.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "R", R)
        object.__setattr__(g, "L", L)
        return g


@dataclass(frozen=True)
class Permutation:
    values: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        if n == 0:
            raise InvalidInputError("empty permutation (n = 0)")
        if sorted(self.values) != list(range(1, n + 1)):
            raise InvalidInputError(f"not a bijection of 1..{n}: {list(self.values)}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Permutation":
        return cls(tuple(values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, k: int) -> int:
        """P(k) for a 1-based position k."""
        return self.values[k - 1]

    def padded(self) -> List[int]:
        """Values with a dummy slot at index 0, for 1-based loops."""
        return [0, *self.values]


@dataclass(frozen=True)
class LabeledTree:
    n: int
    edges: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError("tree must have at least one vertex (n = 0)")
        if len(self.edges) != self.n - 1:
            raise InvalidInputError(
                f"a tree on {self.n} vertices needs {self.n - 1} edges, got {len(self.edges)}"
            )
        parent = list(range(self.n + 1))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for u, v in self.edges:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise InvalidInputError(f"edge ({u},{v}) closes a cycle")
            parent[ru] = rv
        # n-1 edges without a cycle is connected.

    @classmethod
    def of(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "LabeledTree":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    def adjacency(self) -> List[List[int]]:
        adj: List[List[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class Dag:
    n: int
    arcs: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvalidInputError("DAG must have at least one vertex (n = 0)")
        seen = set()
        for u, v in self.arcs:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise InvalidInputError(f"self-loop on vertex {u}")
            if (u, v) in seen:
                raise InvalidInputError(f"duplicate arc {u}->{v}")
            seen.add((u, v))
        self.topological_order()

    @classmethod
    def of(cls, n: int, arcs: Iterable[Tuple[int, int]]) -> "Dag":
        return cls(n, tuple((int(u), int(v)) for u, v in arcs))

    def successors(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.arcs:
            out[u].append(v)
        return out

    def topological_order(self) -> List[int]:
        """Vertices such that every arc goes from an earlier to a later one."""
        sorter = graphlib.TopologicalSorter({v: () for v in range(1, self.n + 1)})
        for u, v in self.arcs:
            sorter.add(v, u)
        try:
            return list(sorter.static_order())
        except graphlib.CycleError as exc:
            raise InvalidInputError(f"cycle detected: {exc.args[1]}") from None


Structure = Union[Permutation, LabeledTree, Dag]


def _check_vertex(v: int, n: int):
    if not 1 <= v <= n:
        raise InvalidInputError(f"vertex {v} outside 1..{n}")


def _check_interval(g: Generator, x: int, y: int):
    if not 1 <= x <= y <= g.n:
        raise ValueError(f"need 1 <= x <= y <= {g.n}, got ({x}, {y})")


def generator_is_member(g: Generator, x: int, y: int) -> bool:
    _check_interval(g, x, y)
    return g.R[x - 1] >= y and g.L[y - 1] <= x


def generator_intersect(g1: Generator, g2: Generator) -> Generator:
    """Generator of the intersection of the two represented families."""
    if g1.n != g2.n:
        raise ValueError(f"generator sizes differ: {g1.n} != {g2.n}")
    return Generator._unchecked(
        g1.n,
        tuple(map(min, g1.R, g2.R)),
        tuple(map(max, g1.L, g2.L)),
    )


def generator_materialize(g: Generator) -> List[Interval]:
    """Every member, ordered by end ascending then begin descending.  O(n^2)."""
    R, L = g.R, g.L
    out = []
    for y in range(1, g.n + 1):
        for x in range(y, L[y - 1] - 1, -1):
            if R[x - 1] >= y:
                out.append(Interval(x, y))
    return out


def validate_structure(kind: FamilyKind, raw) -> Structure:
    """Build the ground structure a family kind expects from parsed input.

    ``raw`` is a flat sequence of values for permutation kinds, and an
    ``(n, pairs)`` tuple for tree and DAG kinds.
    """
    kind = FamilyKind(kind)
    if kind in PERMUTATION_KINDS:
        if isinstance(raw, (Permutation, LabeledTree, Dag)):
            if isinstance(raw, Permutation):
                return raw
            raise InvalidInputError(f"kind {kind.value} expects a permutation")
        try:
            values = tuple(int(v) for v in raw)
        except (TypeError, ValueError):
            raise InvalidInputError(f"kind {kind.value} expects a permutation") from None
        return Permutation(values)
    if isinstance(raw, (Permutation, LabeledTree, Dag)):
        expected = LabeledTree if kind in TREE_KINDS else Dag
        if isinstance(raw, expected):
            return raw
        raise InvalidInputError(f"kind {kind.value} expects a {kind.structure}")
    try:
        n, pairs = raw
        n = int(n)
        pairs = [(int(u), int(v)) for u, v in pairs]
    except (TypeError, ValueError):
        raise InvalidInputError(f"kind {kind.value} expects a {kind.structure}") from None
    if kind in TREE_KINDS:
        return LabeledTree.of(n, pairs)
    return Dag.of(n, pairs)
