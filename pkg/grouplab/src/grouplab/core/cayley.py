"""Cayley-graph balls, spheres and geodesics."""

import logging
from functools import lru_cache
from typing import List, Tuple

from grouplab.core.alphabet import Word
from grouplab.core.growth import GrowthTable, fit_growth
from grouplab.core.oracles import GroupOracle
from grouplab.core.small_cancellation import SmallCancellation
from grouplab.exceptions import BudgetExceededError

logger = logging.getLogger(__name__)

DEFAULT_BALL_CAP = 10**8


@lru_cache(maxsize=8)
def _spheres(oracle: GroupOracle, radius: int, cap: int) -> Tuple[Tuple[Word, ...], ...]:
    estimate = oracle.ball_size_estimate(radius)
    if estimate is not None and estimate > cap:
        raise BudgetExceededError("memory", cap, estimate)

    if isinstance(oracle, SmallCancellation):
        return tuple(tuple(oracle.sphere_words(r, cap)) for r in range(radius + 1))

    key = oracle.alphabet.shortlex_key
    levels: List[Tuple[Word, ...]] = [((),)]
    seen = {()}
    for r in range(radius):
        nxt = set()
        for element in levels[-1]:
            for neighbor in oracle.neighbors(element):
                if neighbor not in seen:
                    seen.add(neighbor)
                    nxt.add(neighbor)
        if len(seen) > cap:
            raise BudgetExceededError("memory", cap, len(seen))
        levels.append(tuple(sorted(nxt, key=key)))
        logger.debug("%s sphere %d: %d elements", oracle.describe(), r + 1, len(nxt))
    return tuple(levels)


def spheres(oracle: GroupOracle, radius: int, cap: int = DEFAULT_BALL_CAP) -> List[List[Word]]:
    """Normal forms of each sphere S(0), ..., S(radius), each in shortlex order."""
    if radius < 0:
        return []
    return [list(level) for level in _spheres(oracle, radius, cap)]


def ball(oracle: GroupOracle, radius: int, cap: int = DEFAULT_BALL_CAP) -> List[Word]:
    """Every element of length <= radius, in normal form, shortlex ordered."""
    if radius < 0:
        return []
    out: List[Word] = []
    for level in _spheres(oracle, radius, cap):
        out.extend(level)
    return out


def growth_table(
    oracle: GroupOracle, r_max: int, cap: int = DEFAULT_BALL_CAP, r_min: int = -1
) -> GrowthTable:
    """gr_G(r) = #ball(r) for r = 0..r_max, with the fitted growth rate."""
    counts: List[int] = []
    total = 0
    for level in _spheres(oracle, r_max, cap):
        total += len(level)
        counts.append(total)
    return fit_growth(list(range(r_max + 1)), counts, r_min)


def geodesic(oracle: GroupOracle, g: Word) -> List[Word]:
    """Vertices of the shortlex-least geodesic from the identity to g."""
    nf = oracle.normal_form(g)
    return [nf[:i] for i in range(len(nf) + 1)]


def geodesic_between(oracle: GroupOracle, x: Word, y: Word) -> List[Word]:
    """Vertices of the translate x * [1, x^-1 y]."""
    return [oracle.multiply(x, v) for v in geodesic(oracle, oracle.multiply(oracle.invert(x), y))]


def path_labelled_by(oracle: GroupOracle, pieces: List[Word]) -> List[Word]:
    """Concatenation [1, g1] . g1[1, g2] . ... of geodesics labelled by the pieces."""
    vertices: List[Word] = [()]
    position: Word = ()
    for piece in pieces:
        for v in geodesic(oracle, piece)[1:]:
            vertices.append(oracle.multiply(position, v))
        position = oracle.multiply(position, piece)
    return vertices
