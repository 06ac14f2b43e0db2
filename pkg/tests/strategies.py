from hypothesis import strategies as st

from commonintervals import Permutation
from commonintervals.oracle import random_dag, random_tree


@st.composite
def permutations(draw, min_size=1, max_size=9):
    n = draw(st.integers(min_size, max_size))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


@st.composite
def trees(draw, max_size=24):
    n = draw(st.integers(1, max_size))
    return random_tree(n, draw(st.integers(0, 2**64 - 1)))


@st.composite
def dags(draw, max_size=16):
    n = draw(st.integers(1, max_size))
    density = draw(st.sampled_from([0.0, 0.15, 0.4, 0.8]))
    return random_dag(n, draw(st.integers(0, 2**64 - 1)), density)
