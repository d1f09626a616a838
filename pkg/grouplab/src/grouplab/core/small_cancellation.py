"""C'(1/6) small cancellation groups: Dehn's algorithm plus a shortlex geodesic table."""

import logging
import threading
from typing import Dict, List, Optional, Sequence, Tuple

from grouplab.core.alphabet import GeneratorAlphabet, Word, format_word, free_reduce, inverse_word
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import BudgetExceededError

logger = logging.getLogger(__name__)

DEFAULT_RADIUS_BUDGET = 14


def cyclically_reduce(word: Word) -> Word:
    word = free_reduce(word)
    while len(word) > 1 and word[0] == -word[-1]:
        word = word[1:-1]
    return word


def symmetrize(relators: Sequence[Word]) -> List[Word]:
    """All cyclic permutations of the relators and their inverses, deduplicated."""
    seen: Dict[Word, None] = {}
    for r in relators:
        for base in (r, inverse_word(r)):
            for i in range(len(base)):
                seen.setdefault(base[i:] + base[:i], None)
    return list(seen)


def _common_prefix(u: Word, v: Word) -> int:
    n = 0
    for x, y in zip(u, v):
        if x != y:
            break
        n += 1
    return n


def max_piece_violation(relators: Sequence[Word]) -> Optional[Tuple[Word, Word, int]]:
    """First pair of R* words sharing a piece of length >= 1/6 of either, or None."""
    symmetric = symmetrize(relators)
    for i, r1 in enumerate(symmetric):
        for r2 in symmetric[i + 1 :]:
            piece = _common_prefix(r1, r2)
            if 6 * piece >= min(len(r1), len(r2)):
                return r1, r2, piece
    return None


class _AbelianKey:
    """Exponent-sum vector reduced modulo the relator lattice (a Hermite form)."""

    def __init__(self, rank: int, relators: Sequence[Word]) -> None:
        self.rank = rank
        rows = [self._exponents(r) for r in relators]
        self.pivots: List[Tuple[int, List[int]]] = self._echelon(rows)

    def _exponents(self, word: Word) -> List[int]:
        vec = [0] * self.rank
        for x in word:
            vec[abs(x) - 1] += 1 if x > 0 else -1
        return vec

    def _echelon(self, rows: List[List[int]]) -> List[Tuple[int, List[int]]]:
        rows = [row[:] for row in rows if any(row)]
        pivots: List[Tuple[int, List[int]]] = []
        for col in range(self.rank):
            active = [row for row in rows if row[col] != 0]
            if not active:
                continue
            rest = [row for row in rows if row[col] == 0]
            # Euclid on the column until a single row keeps a nonzero entry
            while len(active) > 1:
                active.sort(key=lambda row: abs(row[col]))
                head = active[0]
                reduced = [head]
                for row in active[1:]:
                    q = row[col] // head[col]
                    new = [a - q * b for a, b in zip(row, head)]
                    if new[col] != 0:
                        reduced.append(new)
                    elif any(new):
                        rest.append(new)
                active = reduced
            pivot = active[0]
            if pivot[col] < 0:
                pivot = [-a for a in pivot]
            pivots.append((col, pivot))
            rows = rest
        return pivots

    def __call__(self, word: Word) -> Tuple[int, ...]:
        vec = self._exponents(word)
        for col, row in self.pivots:
            q = vec[col] // row[col]
            if q:
                vec = [a - q * b for a, b in zip(vec, row)]
        return tuple(vec)


class SmallCancellation(GroupOracle):
    """Group presented by relators satisfying the metric condition C'(1/6).

    The word problem is solved by Dehn's algorithm. Normal forms are the
    shortlex-least geodesics, looked up in a table that is built breadth-first
    up to the radius budget; words whose Dehn-reduced length exceeds the budget
    raise :class:`BudgetExceededError`.
    """

    kind = "small_cancellation"

    def __init__(
        self,
        rank: int,
        relators: Sequence[Word],
        radius_budget: int = DEFAULT_RADIUS_BUDGET,
    ) -> None:
        alphabet = GeneratorAlphabet(rank)
        super().__init__(alphabet)
        cleaned = [cyclically_reduce(alphabet.validate(r)) for r in relators]
        cleaned = [r for r in cleaned if r]
        if not cleaned:
            raise ValueError("A small cancellation presentation needs a nontrivial relator")
        violation = max_piece_violation(cleaned)
        if violation is not None:
            r1, r2, piece = violation
            raise ValueError(
                f"Relators violate C'(1/6): {format_word(r1)} and {format_word(r2)} "
                f"share a piece of length {piece}"
            )
        self.rank = rank
        self.relators: Tuple[Word, ...] = tuple(cleaned)
        self._symmetric = symmetrize(cleaned)
        self._by_first: Dict[int, List[Word]] = {}
        for r in self._symmetric:
            self._by_first.setdefault(r[0], []).append(r)
        self._budget = radius_budget
        self._key = _AbelianKey(rank, cleaned)

        self._lock = threading.Lock()
        self._levels: List[List[Word]] = [[()]]
        self._buckets: Dict[Tuple[int, ...], List[Word]] = {self._key(()): [()]}
        self._size = 1

    @property
    def radius_budget(self) -> Optional[int]:
        return self._budget

    def key(self) -> Tuple[object, ...]:
        return (self.kind, self.rank, self.relators, self._budget)

    def describe(self) -> str:
        rels = ", ".join(format_word(r) for r in self.relators)
        return f"SmallCancellation({self.rank}; {rels})"

    def dehn_reduce(self, word: Word) -> Word:
        """Apply Dehn's algorithm: replace more than half of a relator by the shorter half."""
        word = free_reduce(word)
        changed = True
        while changed:
            changed = False
            for i, letter in enumerate(word):
                for r in self._by_first.get(letter, ()):
                    m = _common_prefix(word[i:], r)
                    if 2 * m > len(r):
                        word = free_reduce(word[:i] + inverse_word(r[m:]) + word[i + m :])
                        changed = True
                        break
                if changed:
                    break
        return word

    def is_trivial(self, word: Word) -> bool:
        return not self.dehn_reduce(self.alphabet.validate(word))

    def _same_element(self, u: Word, v: Word) -> bool:
        return not self.dehn_reduce(u + inverse_word(v))

    def _extend_to(self, radius: int, cap: Optional[int] = None) -> None:
        if radius > self._budget:
            raise BudgetExceededError("radius", self._budget, radius)
        with self._lock:
            while len(self._levels) <= radius:
                nxt, added = self._next_level(cap)
                # Commit only whole levels: a level cut short by the cap leaves no trace
                for key, words in added.items():
                    self._buckets.setdefault(key, []).extend(words)
                self._size += len(nxt)
                self._levels.append(nxt)
                logger.debug(
                    "geodesic table radius %d: %d elements", len(self._levels) - 1, len(nxt)
                )

    def _next_level(
        self, cap: Optional[int]
    ) -> Tuple[List[Word], Dict[Tuple[int, ...], List[Word]]]:
        level = len(self._levels) - 1
        nxt: List[Word] = []
        added: Dict[Tuple[int, ...], List[Word]] = {}
        for w in self._levels[-1]:
            for x in self.alphabet.letters:
                if w and x == -w[-1]:
                    continue
                candidate = w + (x,)
                key = self._key(candidate)
                fresh = added.setdefault(key, [])
                known = self._buckets.get(key, [])
                if any(
                    len(other) >= level - 1 and self._same_element(candidate, other)
                    for other in known + fresh
                ):
                    continue
                fresh.append(candidate)
                nxt.append(candidate)
                if cap is not None and self._size + len(nxt) > cap:
                    raise BudgetExceededError("memory", cap, self._size + len(nxt))
        return nxt, added

    def sphere_words(self, radius: int, cap: Optional[int] = None) -> List[Word]:
        """Shortlex geodesics of length exactly ``radius``, in shortlex order."""
        self._extend_to(radius, cap)
        return list(self._levels[radius])

    def reduce(self, word: Word) -> Word:
        dehn = self.dehn_reduce(word)
        if not dehn:
            return ()
        if len(dehn) > self._budget:
            raise BudgetExceededError("radius", self._budget, len(dehn))
        self._extend_to(len(dehn))
        for other in self._buckets.get(self._key(dehn), ()):
            if len(other) <= len(dehn) and self._same_element(dehn, other):
                return other
        # Unreachable for genuine C'(1/6) presentations: dehn itself has length <= budget.
        raise BudgetExceededError("radius", self._budget, len(dehn))
