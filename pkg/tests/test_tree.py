from collections import deque

import pytest
from hypothesis import given

from commonintervals import (
    LabeledTree,
    Permutation,
    SweepStats,
    build_min_path_index,
    common_interval_generator,
    connected_interval_generator,
    enumerate_connected_intervals,
    generator_materialize,
    in_path_generator,
    min_on_path,
    path_interval_generator,
)
from commonintervals.families import enumerate_family
from commonintervals.oracle import brute_force_family, random_tree

from strategies import trees


def path_tree(n):
    return LabeledTree.of(n, [(v, v + 1) for v in range(1, n)])


def star(n):
    return LabeledTree.of(n, [(1, v) for v in range(2, n + 1)])


def naive_path(t, x, y):
    adj = t.adjacency()
    parent = {x: None}
    q = deque([x])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                q.append(w)
    out = [y]
    while out[-1] != x:
        out.append(parent[out[-1]])
    return out


def test_min_on_path_examples():
    assert min_on_path(build_min_path_index(path_tree(3)), 1, 3) == 1
    idx = build_min_path_index(star(4))
    assert min_on_path(idx, 2, 3) == 1
    assert all(min_on_path(idx, v, v) == v for v in range(1, 5))
    with pytest.raises(ValueError):
        min_on_path(idx, 0, 2)


@pytest.mark.parametrize("seed", range(4))
def test_path_queries_against_walk(seed):
    t = random_tree(200 if seed == 0 else 60, seed)
    idx = build_min_path_index(t)
    step = 1 if t.n <= 60 else 7
    for x in range(1, t.n + 1, step):
        for y in range(1, t.n + 1):
            path = naive_path(t, x, y)
            assert idx.min_on_path(x, y) == min(path)
            assert idx.max_on_path(x, y) == max(path)
            assert idx.dist(x, y) == len(path) - 1


def test_on_path_and_alignment():
    idx = build_min_path_index(star(4))
    assert idx.on_path(2, 3, 1) and not idx.on_path(2, 3, 4)
    assert idx.aligned(2, 1, 3) and not idx.aligned(2, 3, 4)


def test_class_e_examples():
    assert len(generator_materialize(connected_interval_generator(path_tree(5)))) == 15
    members = generator_materialize(connected_interval_generator(star(5)))
    assert members == [(1, 1), (2, 2), (1, 2), (3, 3), (1, 3), (4, 4), (1, 4), (5, 5), (1, 5)]
    assert enumerate_connected_intervals(path_tree(4)) == 10
    assert enumerate_connected_intervals(star(4)) == 7


def test_class_f_and_g_examples():
    every = [(x, y) for y in range(1, 5) for x in range(y, 0, -1)]
    f = generator_materialize(in_path_generator(star(4)))
    assert f == [iv for iv in every if iv not in ((1, 4), (2, 4))]
    g = generator_materialize(path_interval_generator(star(4)))
    assert g == [(1, 1), (2, 2), (1, 2), (3, 3), (1, 3), (4, 4)]
    for gen in (in_path_generator, path_interval_generator):
        assert len(generator_materialize(gen(path_tree(6)))) == 21


@pytest.mark.parametrize("kind", "EFG")
@given(t=trees())
def test_tree_families_match_oracle(kind, t):
    want = brute_force_family(kind, t)
    gen = {"E": connected_interval_generator, "F": in_path_generator, "G": path_interval_generator}[kind]
    assert generator_materialize(gen(t)) == want
    got = []
    assert enumerate_family(kind, t, lambda x, y: got.append((x, y))) == len(want)
    assert got == [tuple(iv) for iv in want]


@given(trees())
def test_g_is_e_meet_f(t):
    e = set(generator_materialize(connected_interval_generator(t)))
    f = set(generator_materialize(in_path_generator(t)))
    assert set(generator_materialize(path_interval_generator(t))) == e & f


@given(trees(max_size=40))
def test_connected_sweep_counters(t):
    stats = SweepStats()
    connected_interval_generator(t, stats)
    assert stats.pushes == 2 * t.n and stats.removals <= 2 * t.n


def test_path_tree_in_order_matches_class_a():
    import itertools

    for n in range(1, 9):
        # a path whose k-th vertex is labelled P(k)
        for values in itertools.islice(itertools.permutations(range(1, n + 1)), 0, None, max(1, n * n)):
            t = LabeledTree.of(n, [(values[k], values[k + 1]) for k in range(n - 1)])
            inverse = [0] * n
            for k, v in enumerate(values):
                inverse[v - 1] = k + 1
            a = generator_materialize(common_interval_generator(Permutation(tuple(inverse))))
            assert generator_materialize(connected_interval_generator(t)) == a
