"""(epsilon, f)-barriers along geodesics and barrier-free statistics."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from grouplab.contracting.axis import Axis, projection_diameter
from grouplab.core.alphabet import Word, format_word
from grouplab.core.cayley import DEFAULT_BALL_CAP, ball, geodesic, geodesic_between
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import UnsupportedOracleError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BarrierRecord:
    """A translate t with t.o and t.f.o both within epsilon of the path."""

    witness: Word
    epsilon: int
    f: Word
    positions: Tuple[Word, Word]
    indices: Tuple[int, int]

    def verify(self, oracle: GroupOracle, path: Sequence[Word]) -> bool:
        tf = oracle.multiply(self.witness, self.f)
        near_t = min(oracle.distance(self.witness, p) for p in path)
        near_tf = min(oracle.distance(tf, p) for p in path)
        return near_t <= self.epsilon and near_tf <= self.epsilon

    def __str__(self) -> str:
        return (
            f"barrier t={format_word(self.witness) or '1'} for f={format_word(self.f)} "
            f"at eps={self.epsilon}, path indices {self.indices}"
        )


def is_degenerate(f: Word, epsilon: int) -> bool:
    """|f| <= 2 epsilon: t = 1 near any path vertex already works."""
    return len(f) <= 2 * epsilon


def _neighborhood(oracle: GroupOracle, path: Sequence[Word], epsilon: int) -> Dict[Word, List[int]]:
    """Elements within epsilon of the path, each with the path indices within epsilon of it."""
    near: Dict[Word, List[int]] = {}
    offsets = ball(oracle, epsilon)
    for i, p in enumerate(path):
        for b in offsets:
            x = oracle.multiply(p, b)
            indices = near.setdefault(x, [])
            if not indices or indices[-1] != i:
                indices.append(i)
    return near


def barrier_witnesses(
    oracle: GroupOracle, path: Sequence[Word], epsilon: int, f: Word
) -> List[Tuple[Word, List[int], List[int]]]:
    """Every barrier witness t, shortlex ordered, with the path indices near t and near t.f."""
    f = oracle.normal_form(f)
    near = _neighborhood(oracle, path, epsilon)
    found = []
    for t, indices in near.items():
        tf = oracle.multiply(t, f)
        if tf in near:
            found.append((t, indices, near[tf]))
    found.sort(key=lambda item: oracle.alphabet.shortlex_key(item[0]))
    return found


def has_barrier(
    oracle: GroupOracle, path: Sequence[Word], epsilon: int, f: Word
) -> Optional[BarrierRecord]:
    """The shortlex-first (epsilon, f)-barrier on the path, or None."""
    witnesses = barrier_witnesses(oracle, path, epsilon, f)
    if not witnesses:
        return None
    t, near_t, near_tf = witnesses[0]

    def closest(x: Word, candidates: List[int]) -> int:
        return min(candidates, key=lambda i: (oracle.distance(x, path[i]), i))

    i = closest(t, near_t)
    j = closest(oracle.multiply(t, f), near_tf)
    return BarrierRecord(
        witness=t,
        epsilon=epsilon,
        f=oracle.normal_form(f),
        positions=(path[i], path[j]),
        indices=(i, j),
    )


def barrier_free_pieces(
    oracle: GroupOracle, path: Sequence[Word], epsilon: int, f: Word
) -> List[Tuple[int, int]]:
    """Maximal runs [start, end] of path indices whose edges lie under no barrier span."""
    edges = len(path) - 1
    covered = [False] * max(edges, 0)
    for _, near_t, near_tf in barrier_witnesses(oracle, path, epsilon, f):
        for i in near_t:
            for j in near_tf:
                for e in range(min(i, j), max(i, j)):
                    covered[e] = True

    pieces: List[Tuple[int, int]] = []
    start: Optional[int] = None
    for e in range(edges):
        if not covered[e] and start is None:
            start = e
        elif covered[e] and start is not None:
            pieces.append((start, e))
            start = None
    if start is not None:
        pieces.append((start, edges))
    return pieces


def barrier_free_portion(
    oracle: GroupOracle, g: Word, epsilon: int, f: Word, L_min: int
) -> float:
    """Share of geodesic(g) covered by barrier-free pieces of length >= L_min; 0 for g = 1."""
    path = geodesic(oracle, g)
    length = len(path) - 1
    if length == 0:
        return 0.0
    pieces = barrier_free_pieces(oracle, path, epsilon, f)
    kept = sum(end - start for start, end in pieces if end - start >= L_min)
    return kept / length


def _is_barrier_free(oracle: GroupOracle, g: Word, epsilon: int, M: int, f: Word) -> bool:
    if M == 0:
        return has_barrier(oracle, geodesic(oracle, g), epsilon, f) is None
    offsets = ball(oracle, M)
    for x in offsets:
        for b in offsets:
            y = oracle.multiply(g, b)
            if has_barrier(oracle, geodesic_between(oracle, x, y), epsilon, f) is None:
                return True
    return False


def barrier_free_set(
    oracle: GroupOracle, epsilon: int, M: int, f: Word, r: int, cap: int = DEFAULT_BALL_CAP
) -> Set[Word]:
    """The (epsilon, M, f)-barrier-free elements of ball(r).

    M > 0 searches every geodesic from B(1, M) to B(g, M); this is exhaustive
    only when geodesics are unique, so it is limited to trees.
    """
    if M > 0 and not oracle.is_tree:
        raise UnsupportedOracleError(
            f"M={M} needs unique geodesics; {oracle.describe()} is not a tree"
        )
    if is_degenerate(oracle.normal_form(f), epsilon):
        logger.warning("degenerate barrier parameters: |f| <= 2*epsilon (epsilon=%d)", epsilon)
    return {g for g in ball(oracle, r, cap) if _is_barrier_free(oracle, g, epsilon, M, f)}


@dataclass
class BarrierStatistics:
    """Ball counts of barrier-free elements per radius."""

    radii: List[int]
    totals: List[int]
    barrier_free: List[int]
    sphere_totals: List[int] = field(default_factory=list)
    sphere_barrier_free: List[int] = field(default_factory=list)

    @property
    def fractions(self) -> List[float]:
        return [b / t for b, t in zip(self.barrier_free, self.totals)]

    @property
    def sphere_fractions(self) -> List[float]:
        return [b / t if t else 0.0 for b, t in zip(self.sphere_barrier_free, self.sphere_totals)]

    def header(self) -> List[str]:
        return ["r", "total", "barrier_free", "fraction"]

    def rows(self) -> List[List[str]]:
        return [
            [str(r), str(t), str(b), f"{fr:.6f}"]
            for r, t, b, fr in zip(self.radii, self.totals, self.barrier_free, self.fractions)
        ]


def barrier_statistics(
    oracle: GroupOracle, epsilon: int, f: Word, r_max: int, M: int = 0, cap: int = DEFAULT_BALL_CAP
) -> BarrierStatistics:
    free_set = barrier_free_set(oracle, epsilon, M, f, r_max, cap)
    sphere_totals = [0] * (r_max + 1)
    sphere_free = [0] * (r_max + 1)
    for g in ball(oracle, r_max, cap):
        sphere_totals[len(g)] += 1
        if g in free_set:
            sphere_free[len(g)] += 1
    totals, free = [], []
    running_total = running_free = 0
    for r in range(r_max + 1):
        running_total += sphere_totals[r]
        running_free += sphere_free[r]
        totals.append(running_total)
        free.append(running_free)
    return BarrierStatistics(
        radii=list(range(r_max + 1)),
        totals=totals,
        barrier_free=free,
        sphere_totals=sphere_totals,
        sphere_barrier_free=sphere_free,
    )


def barrier_constants(
    oracle: GroupOracle, f: Word, r: int, tau_max: int, eps_max: int
) -> Dict[int, Optional[int]]:
    """For each tau, the least epsilon such that every geodesic [1, g], g in ball(r),
    projecting to Ax(f) with diameter > tau contains an (epsilon, f)-barrier.

    None marks a tau for which no epsilon <= eps_max suffices.
    """
    axis = Axis(oracle, f)
    needed: List[Tuple[int, Optional[int]]] = []
    for g in ball(oracle, r):
        path = geodesic(oracle, g)
        diameter = projection_diameter(axis, path)
        least = next((e for e in range(eps_max + 1) if has_barrier(oracle, path, e, f)), None)
        needed.append((diameter, least))

    out: Dict[int, Optional[int]] = {}
    for tau in range(tau_max + 1):
        relevant = [least for diameter, least in needed if diameter > tau]
        if any(least is None for least in relevant):
            out[tau] = None
        else:
            out[tau] = max((least for least in relevant if least is not None), default=0)
    return out
