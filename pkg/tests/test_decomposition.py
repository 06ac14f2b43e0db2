import json
from pathlib import Path

import pytest
from hypothesis import given

from commonintervals import (
    ConstructionState,
    DecompositionTree,
    NodeLabel,
    Permutation,
    TreeStats,
    build_decomposition_tree,
    enumerate_common_intervals,
    expand_family,
    is_simple,
    node_quotient,
    try_extension,
    try_prime_creation,
)
from commonintervals.oracle import brute_force_decomposition, brute_force_family, overlap_free

from strategies import permutations

DATA = Path(__file__).parent / "data"
EIGHTEEN = Permutation((6, 7, 8, 9, 3, 5, 1, 4, 2, 14, 16, 15, 17, 18, 12, 10, 13, 11))


def test_identity_is_one_increasing_node():
    t = build_decomposition_tree(Permutation.identity(3))
    root = t.root
    assert root.label is NodeLabel.INCREASING
    assert [c.position_range for c in root.children] == [(1, 1), (2, 2), (3, 3)]
    assert all(c.is_leaf for c in root.children)


def test_reversal_and_prime_roots():
    assert build_decomposition_tree(Permutation((2, 1))).root.label is NodeLabel.DECREASING
    t = build_decomposition_tree(Permutation((2, 4, 1, 3)))
    assert t.root.label is NodeLabel.PRIME and len(t.root.children) == 4


def test_single_leaf():
    t = build_decomposition_tree(Permutation((1,)))
    assert t.root.is_leaf and t.root.label is NodeLabel.LEAF
    assert t.to_dict() == {"label": "Leaf", "pos": [1, 1], "val": [1, 1], "children": []}


def test_eighteen_golden():
    want = DecompositionTree.from_dict(json.loads((DATA / "eighteen_tree.json").read_text()))
    assert build_decomposition_tree(EIGHTEEN) == want


@given(permutations(max_size=10))
def test_tree_matches_oracle(p):
    t = build_decomposition_tree(p)
    assert t == brute_force_decomposition(p)


@given(permutations(max_size=10))
def test_nodes_are_the_overlap_free_members(p):
    t = build_decomposition_tree(p)
    assert sorted(n.position_range for n in t.nodes()) == sorted(overlap_free(brute_force_family("A", p)))


@given(permutations(max_size=10))
def test_expand_family_recovers_all_common_intervals(p):
    got = []
    count = expand_family(build_decomposition_tree(p), lambda x, y: got.append((x, y)))
    assert got == [tuple(iv) for iv in brute_force_family("A", p)]
    assert count == enumerate_common_intervals(p)


@given(permutations(max_size=40))
def test_quotients_and_operation_budget(p):
    stats = TreeStats()
    t = build_decomposition_tree(p, stats)
    assert stats.operations <= p.n - 1
    assert stats.invariant_violations == 0
    for node in t.nodes():
        if node.is_leaf:
            continue
        q = node_quotient(t, node).values
        k = len(q)
        if node.label is NodeLabel.INCREASING:
            assert q == tuple(range(1, k + 1))
        elif node.label is NodeLabel.DECREASING:
            assert q == tuple(range(k, 0, -1))
        else:
            # no simple permutation has size 3
            assert k >= 4 and is_simple(node_quotient(t, node))


def test_quotient_of_leaf_rejected():
    t = build_decomposition_tree(Permutation((2, 1)))
    with pytest.raises(ValueError):
        node_quotient(t, t.root.children[0])


@given(permutations(max_size=12))
def test_dict_round_trip(p):
    t = build_decomposition_tree(p)
    again = DecompositionTree.from_dict(t.to_dict())
    assert again == t and again.to_dict() == t.to_dict()


def test_dot_output():
    text = build_decomposition_tree(Permutation((2, 1))).to_dot()
    assert text.startswith("digraph") and text.endswith("}\n")
    assert "Decreasing" in text and text.count("->") == 2


def stepwise(p, stats=None):
    s = ConstructionState(p, stats)
    for y in range(1, p.n + 1):
        s.arrive(y)
        while try_extension(s) or try_prime_creation(s):
            pass
        s.commit()
    return s.finish()


@given(permutations(max_size=30))
def test_stepwise_state_matches_fast_builder(p):
    a, b = TreeStats(), TreeStats()
    assert stepwise(p, a) == build_decomposition_tree(p, b)
    assert a == b


def test_extension_steps():
    s = ConstructionState(Permutation((1, 2, 3)))
    s.arrive(1)
    assert not try_extension(s) and not try_prime_creation(s)
    s.commit()
    s.arrive(2)
    assert try_extension(s)
    s.commit()
    s.arrive(3)
    assert try_extension(s)
    s.commit()
    root = s.finish().root
    # leaf 3 was appended to the existing Increasing node
    assert root.label is NodeLabel.INCREASING and len(root.children) == 3
    assert s.stats.extensions == 2 and s.stats.primes == 0


def test_prime_step():
    s = ConstructionState(Permutation((2, 4, 1, 3)))
    for y in range(1, 4):
        s.arrive(y)
        assert not try_extension(s) and not try_prime_creation(s)
        s.commit()
    s.arrive(4)
    assert not try_extension(s)
    assert try_prime_creation(s)
    s.commit()
    root = s.finish().root
    assert root.label is NodeLabel.PRIME and len(root.children) == 4
