"""Brute-force double-coset partition of a ball, used to cross-check canonical_rep."""

import logging
from dataclasses import dataclass, field
from typing import Dict, Hashable, Iterable, List, Optional, Tuple

from grouplab.core.alphabet import Word, format_word, free_reduce, inverse_word
from grouplab.core.cayley import DEFAULT_BALL_CAP, ball
from grouplab.core.oracles import FreeGroup
from grouplab.subgroups.double_cosets import canonical_rep
from grouplab.subgroups.stallings import StallingsGraph

logger = logging.getLogger(__name__)


class UnionFind:
    """Disjoint sets with union by rank and path compression."""

    def __init__(self, items: Iterable[Hashable]) -> None:
        self.parent: Dict[Hashable, Hashable] = {x: x for x in items}
        self.rank: Dict[Hashable, int] = {x: 0 for x in self.parent}

    def find(self, x: Hashable) -> Hashable:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x: Hashable, y: Hashable) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def __contains__(self, x: object) -> bool:
        return x in self.parent


@dataclass
class BruteForcePartition:
    """Classes of ball(r), each shortlex sorted, ordered by their least element."""

    radius: int
    buffer: int
    classes: List[List[Word]]
    warnings: List[str] = field(default_factory=list)
    disagreements: List[Tuple[Word, Word]] = field(default_factory=list)

    def class_of(self) -> Dict[Word, int]:
        return {w: i for i, members in enumerate(self.classes) for w in members}

    @property
    def agrees(self) -> bool:
        return not self.warnings and not self.disagreements


def default_buffer(H: StallingsGraph, K: StallingsGraph) -> int:
    lengths = [len(w) for w in H.basis() + K.basis()]
    return 2 * max(lengths, default=0) + 2


def brute_force_double_cosets(
    H: StallingsGraph,
    K: StallingsGraph,
    r: int,
    buffer: Optional[int] = None,
    cap: int = DEFAULT_BALL_CAP,
) -> BruteForcePartition:
    """Partition ball(r) into double cosets by closing ball(r + buffer) under H- and K-moves.

    Two elements of ball(r) with the same canonical representative that land in
    different classes mean the buffer was too small; each such pair is logged as
    a warning and stored on the result. Elements in one class with different
    representatives are recorded as disagreements.
    """
    if buffer is None:
        buffer = default_buffer(H, K)
    oracle = FreeGroup(H.rank)
    region = ball(oracle, r + buffer, cap)
    uf = UnionFind(region)

    left = [s for h in H.basis() for s in (h, inverse_word(h))]
    right = [t for k in K.basis() for t in (k, inverse_word(k))]
    for g in region:
        for s in left:
            moved = free_reduce(s + g)
            if moved in uf:
                uf.union(g, moved)
        for t in right:
            moved = free_reduce(g + t)
            if moved in uf:
                uf.union(g, moved)

    grouped: Dict[Hashable, List[Word]] = {}
    for g in ball(oracle, r, cap):
        grouped.setdefault(uf.find(g), []).append(g)
    classes = sorted(grouped.values(), key=lambda members: oracle.alphabet.shortlex_key(members[0]))

    result = BruteForcePartition(radius=r, buffer=buffer, classes=classes)
    class_index = result.class_of()
    by_rep: Dict[Word, int] = {}
    for i, members in enumerate(classes):
        reps = {canonical_rep(H, K, g) for g in members}
        if len(reps) > 1:
            ordered = oracle.alphabet.sorted_words(reps)
            result.disagreements.append((ordered[0], ordered[1]))
        for rep in reps:
            if rep in by_rep and by_rep[rep] != i:
                a, b = classes[by_rep[rep]][0], members[0]
                message = (
                    f"buffer {buffer} too small at radius {r}: {format_word(a) or '1'} and "
                    f"{format_word(b) or '1'} share representative {format_word(rep) or '1'}"
                )
                logger.warning(message)
                result.warnings.append(message)
            by_rep.setdefault(rep, class_index[members[0]])
    return result
