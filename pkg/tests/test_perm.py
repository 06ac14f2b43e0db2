import itertools

import pytest
from hypothesis import given

from commonintervals import (
    Permutation,
    SweepStats,
    common_interval_generator,
    enumerate_common_intervals,
    find_nontrivial_common_interval,
    fixed_interval_generator,
    frame_interval_generator,
    generator_is_member,
    generator_materialize,
    hurdle_generator,
    is_simple,
    reduce_two_permutations,
    side_extrema,
)
from commonintervals.families import compute_generator, enumerate_family
from commonintervals.oracle import brute_force_family

from strategies import permutations

WITNESS = Permutation((3, 8, 1, 5, 7, 4, 6, 2))


def naive_extrema(p):
    P = p.padded()
    n = p.n
    out = []
    for x in range(1, n + 1):
        left, right = P[1:x], P[x + 1 :]
        out.append(
            (
                min([v for v in left if v > P[x]], default=n + 1),
                max([v for v in left if v < P[x]], default=0),
                min([v for v in right if v > P[x]], default=n + 1),
                max([v for v in right if v < P[x]], default=0),
            )
        )
    return out


@given(permutations(max_size=12))
def test_side_extrema_match_naive(p):
    e = side_extrema(p)
    got = list(zip(e.min_greater_left, e.max_smaller_left, e.min_greater_right, e.max_smaller_right))[1:]
    assert got == naive_extrema(p)


def test_side_extrema_small():
    e = side_extrema(Permutation((2, 3, 1)))
    assert e.min_greater_left[2] == 4 and e.max_smaller_left[2] == 2
    assert e.max_smaller_left[3] == 0 and e.min_greater_left[3] == 2


@pytest.mark.parametrize("kind", "ABCD")
@given(p=permutations())
def test_generators_match_oracle(kind, p):
    g = compute_generator(kind, p)
    assert generator_materialize(g) == brute_force_family(kind, p)
    got = []
    assert enumerate_family(kind, p, lambda x, y: got.append((x, y))) == len(got)
    assert got == [tuple(iv) for iv in brute_force_family(kind, p)]


def test_identity_and_reversal_examples():
    g = common_interval_generator(Permutation.identity(3))
    assert g.R == (3, 3, 3) and g.L == (1, 1, 1)
    assert enumerate_common_intervals(Permutation((3, 2, 1))) == 6
    assert generator_materialize(common_interval_generator(Permutation((2, 4, 1, 3)))) == [
        (1, 1), (2, 2), (3, 3), (4, 4), (1, 4)
    ]


def test_witness_interval():
    g = common_interval_generator(WITNESS)
    assert generator_is_member(g, 4, 7)
    assert not is_simple(WITNESS)


def test_fixed_frame_hurdle_examples():
    p = Permutation((2, 1, 3))
    assert generator_materialize(fixed_interval_generator(p)) == [(1, 1), (2, 2), (1, 2), (3, 3), (1, 3)]
    # frame: min at the left end, max at the right end
    frame = generator_materialize(frame_interval_generator(Permutation((1, 3, 2, 4))))
    assert (1, 2) in frame and (1, 4) in frame and (1, 3) not in frame
    h = generator_materialize(hurdle_generator(Permutation((1, 3, 2, 4))))
    assert (1, 4) in h and (1, 3) not in h


def test_hurdle_is_meet_of_common_and_frame():
    for v in itertools.permutations(range(1, 6)):
        p = Permutation(v)
        a = set(generator_materialize(common_interval_generator(p)))
        c = set(generator_materialize(frame_interval_generator(p)))
        assert set(generator_materialize(hurdle_generator(p))) == a & c


def test_simplicity():
    assert is_simple(Permutation((2, 4, 1, 3)))
    assert is_simple(Permutation((1,))) and is_simple(Permutation((2, 1)))
    assert find_nontrivial_common_interval(Permutation.identity(4)) is not None
    w = find_nontrivial_common_interval(WITNESS)
    P = WITNESS.padded()
    window = P[w.begin : w.end + 1]
    assert 1 < w.end - w.begin + 1 < 8 and max(window) - min(window) == w.end - w.begin


@given(permutations(max_size=9))
def test_simplicity_matches_oracle(p):
    nontrivial = [iv for iv in brute_force_family("A", p) if 1 < iv.end - iv.begin + 1 < p.n]
    assert is_simple(p) == (not nontrivial)
    w = find_nontrivial_common_interval(p)
    assert w is None or w in nontrivial


def test_reduce_two_permutations():
    p1 = Permutation((2, 3, 1, 4))
    p2 = Permutation((4, 2, 3, 1))
    q = reduce_two_permutations(p1, p2)
    assert q.values == (2, 3, 4, 1)
    assert reduce_two_permutations(p1, p1) == Permutation.identity(4)
    with pytest.raises(ValueError):
        reduce_two_permutations(p1, Permutation.identity(3))


@given(permutations(max_size=30))
def test_sweep_work_counters(p):
    stats = SweepStats()
    common_interval_generator(p, stats)
    # two sweeps, each pushing every vertex once
    assert stats.pushes == 2 * p.n and stats.removals <= 2 * p.n


def test_family_inclusions_and_reverse_complement():
    for n in range(1, 8):
        for v in itertools.permutations(range(1, n + 1)):
            p = Permutation(v)
            a = set(generator_materialize(common_interval_generator(p)))
            assert set(generator_materialize(fixed_interval_generator(p))) <= a
            # reading positions backwards and values upside down keeps every common interval
            rc = Permutation(tuple(n + 1 - x for x in reversed(v)))
            mirrored = {(n + 1 - y, n + 1 - x) for x, y in a}
            assert set(generator_materialize(common_interval_generator(rc))) == mirrored
            assert is_simple(p) == (len(a) == n + (1 if n > 1 else 0))
