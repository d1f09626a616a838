"""Axes of loxodromic elements and shortest-point projections onto them."""

import logging
import math
import threading
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from grouplab.core.alphabet import Word, format_word, free_reduce, inverse_word
from grouplab.core.cayley import ball, geodesic_between
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import (
    InconclusiveProjectionError,
    InvalidWordError,
    UnsupportedOracleError,
)

logger = logging.getLogger(__name__)

INITIAL_WINDOW = 8
WINDOW_CAP = 64
MAX_PAIRS = 10**5


def primitive_root(oracle: GroupOracle, f: Word) -> Word:
    """The word u with f = u^m for the largest m.

    f is written as c v c^-1 with v cyclically reduced; the root is c p c^-1
    where p is the shortest period of v that divides its length.
    """
    if not oracle.is_free:
        raise UnsupportedOracleError(f"Root extraction needs a free group, got {oracle.describe()}")
    f = oracle.normal_form(f)
    if not f:
        raise InvalidWordError("The trivial element has no primitive root", word="1")

    head = 0
    while head < len(f) - 1 - head and f[head] == -f[len(f) - 1 - head]:
        head += 1
    conj, core = f[:head], f[head : len(f) - head]

    n = len(core)
    period = n
    for p in range(1, n + 1):
        if n % p == 0 and core[:p] * (n // p) == core:
            period = p
            break
    root = free_reduce(conj + core[:period] + inverse_word(conj))
    if oracle.power(root, n // period) != f:
        raise InvalidWordError(f"Root check failed for {format_word(f)}", word=format_word(f))
    return root


class Axis:
    """The vertex set t.<u>.o of a translate of Ax(f), u the primitive root of f.

    Projections are cached per point; the cache is guarded by a lock so
    concurrent readers see complete entries only.
    """

    def __init__(self, oracle: GroupOracle, f: Word, translate: Word = ()) -> None:
        self.oracle = oracle
        self.f = oracle.normal_form(f)
        if not self.f:
            raise InvalidWordError("An axis needs a nontrivial element", word="1")
        if oracle.is_free:
            self.root = primitive_root(oracle, self.f)
        else:
            self.root = self.f
        self.translate = oracle.normal_form(translate)
        self._lock = threading.Lock()
        self._projections: Dict[Word, Tuple[int, FrozenSet[Word]]] = {}

    def __repr__(self) -> str:
        t = format_word(self.translate) or "1"
        return f"Axis(f={format_word(self.f)}, root={format_word(self.root)}, t={t})"

    def vertex(self, n: int) -> Word:
        return self.oracle.multiply(self.translate, self.oracle.power(self.root, n))

    def window(self, n_max: int) -> List[Word]:
        """Vertices t u^n for |n| <= n_max, ordered by n."""
        return [self.vertex(n) for n in range(-n_max, n_max + 1)]

    def translated(self, g: Word) -> "Axis":
        """The axis g . A."""
        return Axis(self.oracle, self.f, self.oracle.multiply(g, self.translate))

    def _root_exponent(self, w: Word) -> Optional[int]:
        w = self.oracle.normal_form(w)
        bound = len(w) + 1
        for n in range(-bound, bound + 1):
            if self.oracle.power(self.root, n) == w:
                return n
        return None

    def contains(self, x: Word) -> bool:
        local = self.oracle.multiply(self.oracle.invert(self.translate), x)
        return self._root_exponent(local) is not None

    def same_as(self, other: "Axis") -> bool:
        """Equal as vertex sets: same cyclic subgroup and translates in the same coset."""
        if self.oracle != other.oracle:
            return False
        if self.oracle.normal_form(self.root) not in (other.root, self.oracle.invert(other.root)):
            return False
        return other.contains(self.translate)

    def projection(self, x: Word) -> Tuple[int, FrozenSet[Word]]:
        """(distance to the axis, set of nearest axis vertices) for x."""
        x = self.oracle.normal_form(x)
        cached = self._projections.get(x)
        if cached is not None:
            return cached

        n_max = INITIAL_WINDOW
        while True:
            distances = [self.oracle.distance(x, self.vertex(n)) for n in range(-n_max, n_max + 1)]
            best = min(distances)
            on_boundary = distances[0] == best or distances[-1] == best
            if not on_boundary:
                break
            if n_max >= WINDOW_CAP:
                raise InconclusiveProjectionError(
                    f"Projection of {format_word(x) or '1'} to {self!r} "
                    "reaches the window boundary",
                    window=n_max,
                )
            n_max = min(2 * n_max, WINDOW_CAP)

        nearest = frozenset(
            self.vertex(n - n_max) for n, d in enumerate(distances) if d == best
        )
        with self._lock:
            self._projections[x] = (best, nearest)
        return best, nearest


def project(axis: Axis, x: Word) -> FrozenSet[Word]:
    """All axis vertices at minimal distance from x."""
    return axis.projection(x)[1]


def distance_to_axis(axis: Axis, x: Word) -> int:
    return axis.projection(x)[0]


def projection_diameter(axis: Axis, points: Iterable[Word]) -> int:
    """Diameter of the union of the projections of the points."""
    image = set()
    for p in points:
        image.update(project(axis, p))
    ordered = sorted(image, key=axis.oracle.alphabet.shortlex_key)
    diameter = 0
    for i, u in enumerate(ordered):
        for v in ordered[i + 1 :]:
            diameter = max(diameter, axis.oracle.distance(u, v))
    return diameter


def sample_pairs(points: List[Word], max_pairs: int = MAX_PAIRS) -> List[Tuple[Word, Word]]:
    """All unordered pairs when there are few enough, else every k-th pair in order."""
    total = len(points) * (len(points) - 1) // 2
    stride = max(1, math.ceil(total / max_pairs)) if total else 1
    out: List[Tuple[Word, Word]] = []
    index = 0
    for i, x in enumerate(points):
        for y in points[i + 1 :]:
            if index % stride == 0:
                out.append((x, y))
            index += 1
    return out


def contraction_constant(axis: Axis, r_sample: int, max_pairs: int = MAX_PAIRS) -> int:
    """Least C such that sampled geodesics at distance >= C from the axis project to diameter <= C.

    Geodesics meeting the axis (distance 0) impose no constraint.
    """
    oracle = axis.oracle
    constant = 0
    pairs = sample_pairs(ball(oracle, r_sample), max_pairs)
    for x, y in pairs:
        path = geodesic_between(oracle, x, y)
        distance = min(distance_to_axis(axis, v) for v in path)
        if distance == 0:
            continue
        diameter = projection_diameter(axis, path)
        constant = max(constant, min(distance + 1, diameter))
    logger.debug("contraction constant of %r over %d pairs: %d", axis, len(pairs), constant)
    return constant
