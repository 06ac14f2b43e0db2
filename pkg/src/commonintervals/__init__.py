"""Linear-time generators for intersection-closed interval families.

Covers common, fixed, frame and hurdle intervals of a permutation, the
connected / in-path / path intervals of a labelled tree, and the closed
intervals of a DAG, plus the decomposition tree of common intervals.
"""
from .core import (
    Dag,
    FamilyKind,
    Generator,
    Interval,
    InvalidInputError,
    LabeledTree,
    Permutation,
    generator_intersect,
    generator_is_member,
    generator_materialize,
    validate_structure,
)
from .dag import closed_interval_generator, enumerate_closed_intervals, reach_extrema
from .decomposition import (
    ConstructionState,
    DecompositionNode,
    DecompositionTree,
    NodeLabel,
    TreeStats,
    build_decomposition_tree,
    expand_family,
    node_quotient,
    try_extension,
    try_prime_creation,
)
from .families import compute_generator, enumerate_family
from .perm import (
    common_interval_generator,
    enumerate_common_intervals,
    find_nontrivial_common_interval,
    fixed_interval_generator,
    frame_interval_generator,
    hurdle_generator,
    is_simple,
    reduce_two_permutations,
    side_extrema,
)
from .sweep import SweepOracle, SweepStats, sweep_enumerate, sweep_generator
from .tree import (
    MinPathIndex,
    build_min_path_index,
    connected_interval_generator,
    enumerate_connected_intervals,
    in_path_generator,
    min_on_path,
    path_interval_generator,
)

__version__ = "0.1.0"
