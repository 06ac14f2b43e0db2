"""Dispatch from a family kind to its generator and enumeration."""
from __future__ import annotations

from typing import Optional, Union

from . import dag, perm, tree
from .core import FamilyKind, Generator, InvalidInputError, Structure, validate_structure
from .sweep import Sink, SweepOracle, SweepStats, sweep_enumerate

_GENERATORS = {
    FamilyKind.A: perm.common_interval_generator,
    FamilyKind.B: perm.fixed_interval_generator,
    FamilyKind.C: perm.frame_interval_generator,
    FamilyKind.D: perm.hurdle_generator,
    FamilyKind.E: tree.connected_interval_generator,
    FamilyKind.F: tree.in_path_generator,
    FamilyKind.G: tree.path_interval_generator,
    FamilyKind.H: dag.closed_interval_generator,
}


def compute_generator(
    kind: Union[FamilyKind, str], structure: Structure, stats: Optional[SweepStats] = None
) -> Generator:
    kind = FamilyKind(kind)
    structure = validate_structure(kind, structure)
    return _GENERATORS[kind](structure, stats=stats)


def _perm_right_oracle(kind: FamilyKind, p) -> SweepOracle:
    if kind is FamilyKind.B:
        return perm.fixed_interval_oracles(p)[0]
    if kind is FamilyKind.C:
        return perm.frame_interval_oracles(p)[0]
    a = perm.common_interval_oracles(p)[0]
    c = perm.frame_interval_oracles(p)[0]
    # both are rear tests on the same increasing store
    ea, ec = a.evict_back, c.evict_back
    return SweepOracle(evict_back=lambda x, y: ea(x, y) or ec(x, y))


def enumerate_family(kind: Union[FamilyKind, str], structure: Structure, sink: Optional[Sink] = None) -> int:
    """Emit every member, ends ascending and begins descending; returns the count."""
    kind = FamilyKind(kind)
    structure = validate_structure(kind, structure)
    if kind is FamilyKind.A:
        return perm.enumerate_common_intervals(structure, sink)
    if kind is FamilyKind.E:
        return tree.enumerate_connected_intervals(structure, sink)
    if kind is FamilyKind.F:
        return tree.enumerate_in_path_intervals(structure, sink)
    if kind is FamilyKind.G:
        return tree.enumerate_path_intervals(structure, sink)
    if kind is FamilyKind.H:
        return dag.enumerate_closed_intervals(structure, sink)
    if kind in (FamilyKind.B, FamilyKind.C, FamilyKind.D):
        g = _GENERATORS[kind](structure)
        return sweep_enumerate(structure.n, _perm_right_oracle(kind, structure), [l - 1 for l in g.L], sink)
    raise InvalidInputError(f"unknown kind {kind}")
