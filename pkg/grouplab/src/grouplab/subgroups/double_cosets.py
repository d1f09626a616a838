"""Double cosets HgK in free groups as folded automata.

A double coset HgK is the language of reduced paths from the H-basepoint to the
K-basepoint in the graph obtained by gluing the H-graph, a path labelled g and
the K-graph, then folding. The shortlex-least accepted word is the canonical
representative and its length is d(HgK, 1).
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

from grouplab.core.alphabet import GeneratorAlphabet, Word, free_reduce
from grouplab.core.cayley import DEFAULT_BALL_CAP, ball, geodesic, growth_table
from grouplab.core.growth import fit_log_linear, trusted_window
from grouplab.core.oracles import FreeGroup
from grouplab.subgroups.stallings import (
    GraphFolder,
    StallingsGraph,
    subgroup_elements,
    trivial_subgroup,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DoubleCosetAutomaton:
    graph: StallingsGraph
    start: int
    accept: int

    def accepts(self, word: Word) -> bool:
        return self.graph.trace(self.start, free_reduce(word)) == self.accept


def _copy_graph(folder: GraphFolder, graph: StallingsGraph) -> List[int]:
    ids = [folder.add_vertex() for _ in range(graph.num_vertices)]
    for u, label, v in graph.edges():
        folder.pending.append((ids[u], label, ids[v]))
    return ids


def double_coset_automaton(H: StallingsGraph, g: Word, K: StallingsGraph) -> DoubleCosetAutomaton:
    if H.rank != K.rank:
        raise ValueError(f"Subgroups live in different free groups (ranks {H.rank} and {K.rank})")
    g = free_reduce(GeneratorAlphabet(H.rank).validate(g))

    folder = GraphFolder()
    h_ids = _copy_graph(folder, H)
    start = h_ids[H.base]
    end = folder.add_path(start, g)
    k_ids = _copy_graph(folder, K)
    folder.merge(end, k_ids[K.base])
    folder.fold()

    graph, mapping = folder.export(H.rank, start)
    return DoubleCosetAutomaton(graph=graph, start=0, accept=mapping[end])


def shortest_accepted(automaton: DoubleCosetAutomaton) -> Word:
    """Shortlex-least reduced word read from start to accept."""
    if automaton.start == automaton.accept:
        return ()
    graph = automaton.graph
    letters = GeneratorAlphabet(graph.rank).letters
    seen: Set[Tuple[int, int]] = {(automaton.start, 0)}
    queue = deque([(automaton.start, 0, ())])
    while queue:
        vertex, last, word = queue.popleft()
        for letter in letters:
            if letter == -last:
                continue
            nxt = graph.step(vertex, letter)
            if nxt is None:
                continue
            extended = word + (letter,)
            if nxt == automaton.accept:
                return extended
            if (nxt, letter) not in seen:
                seen.add((nxt, letter))
                queue.append((nxt, letter, extended))
    # start and accept are always joined by the glued path
    raise RuntimeError("Double coset automaton has no accepted word")


def canonical_rep(H: StallingsGraph, K: StallingsGraph, g: Word) -> Word:
    """Shortlex-least element of HgK."""
    return shortest_accepted(double_coset_automaton(H, g, K))


@dataclass
class DoubleCosetGrowthTable:
    """gr_G(r) and gr_{H,K}(r) side by side, with the empirical delta."""

    radii: List[int]
    counts: List[int]
    orbital_counts: List[int]
    ratios: List[float]
    delta: float
    window: List[int]
    fitted_rate: float = 0.0
    orbital_rate: float = 0.0
    representatives: List[Word] = field(default_factory=list)

    def header(self) -> List[str]:
        return ["r", "gr_G", "gr_HK", "ratio"]

    def rows(self) -> List[List[str]]:
        return [
            [str(r), str(g), str(c), f"{ratio:.6f}"]
            for r, g, c, ratio in zip(self.radii, self.orbital_counts, self.counts, self.ratios)
        ]


def double_coset_growth(
    H: StallingsGraph,
    K: StallingsGraph,
    r_max: int,
    r_min: int = -1,
    cap: int = DEFAULT_BALL_CAP,
) -> DoubleCosetGrowthTable:
    """Count the double cosets meeting each ball B(r), r = 0..r_max."""
    oracle = FreeGroup(H.rank)
    orbital = growth_table(oracle, r_max, cap, r_min)

    reps: Dict[Word, None] = {}
    counts = [0] * (r_max + 1)
    for g in ball(oracle, r_max, cap):
        rep = canonical_rep(H, K, g)
        if rep == g:
            reps[g] = None
            counts[len(g)] += 1
    for r in range(1, r_max + 1):
        counts[r] += counts[r - 1]
    logger.debug("double cosets up to radius %d: %d", r_max, counts[-1])

    ratios = [c / n for c, n in zip(counts, orbital.counts)]
    window = trusted_window(r_max, r_min)
    fit = fit_log_linear(window, [counts[r] for r in window])
    return DoubleCosetGrowthTable(
        radii=list(range(r_max + 1)),
        counts=counts,
        orbital_counts=list(orbital.counts),
        ratios=ratios,
        delta=min(ratios[r] for r in window),
        window=window,
        fitted_rate=fit.slope,
        orbital_rate=orbital.fitted_rate,
        representatives=list(reps),
    )


def distance_to_subgroup(H: StallingsGraph, v: Word) -> int:
    """d(v, H) = the length of the shortest element of the coset Hv."""
    return len(canonical_rep(H, trivial_subgroup(H.rank), v))


def quasiconvexity_gauge(H: StallingsGraph, r: int) -> int:
    """Largest distance from a geodesic [1, h], h in H with |h| <= r, to H."""
    oracle = FreeGroup(H.rank)
    distances: Dict[Word, int] = {}
    worst = 0
    for h in subgroup_elements(H, r):
        for v in geodesic(oracle, h):
            if v not in distances:
                distances[v] = distance_to_subgroup(H, v)
            worst = max(worst, distances[v])
    return worst
