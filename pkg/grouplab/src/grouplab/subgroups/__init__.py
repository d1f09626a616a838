"""Subgroups of free groups: Stallings graphs and double cosets."""

from grouplab.subgroups.double_cosets import (
    DoubleCosetAutomaton,
    DoubleCosetGrowthTable,
    canonical_rep,
    distance_to_subgroup,
    double_coset_automaton,
    double_coset_growth,
    quasiconvexity_gauge,
)
from grouplab.subgroups.stallings import (
    StallingsGraph,
    is_infinite_index,
    membership,
    stallings_from_generators,
    subgroup_elements,
    subgroup_index,
    subgroup_intersects_cyclic,
    trivial_subgroup,
)
from grouplab.subgroups.union_find import BruteForcePartition, UnionFind, brute_force_double_cosets

__all__ = [
    "BruteForcePartition",
    "DoubleCosetAutomaton",
    "DoubleCosetGrowthTable",
    "StallingsGraph",
    "UnionFind",
    "brute_force_double_cosets",
    "canonical_rep",
    "distance_to_subgroup",
    "double_coset_automaton",
    "double_coset_growth",
    "is_infinite_index",
    "membership",
    "quasiconvexity_gauge",
    "stallings_from_generators",
    "subgroup_elements",
    "subgroup_index",
    "subgroup_intersects_cyclic",
    "trivial_subgroup",
]
