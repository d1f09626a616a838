from grouplab.core.oracles import FreeGroup
from grouplab.subgroups.stallings import StallingsGraph, stallings_from_generators


def subgroup(*gens: str) -> StallingsGraph:
    """Folded graph of the subgroup of F_2 generated by the given words."""
    oracle = FreeGroup(2)
    return stallings_from_generators(oracle, [oracle.alphabet.parse(g) for g in gens])
