"""Normal-form oracles: the concrete groups grouplab computes in."""

from abc import ABC, abstractmethod
from typing import List, Optional, Sequence, Tuple

from grouplab.core.alphabet import GeneratorAlphabet, Word, free_reduce, inverse_word


class GroupOracle(ABC):
    """A group given by a normal-form engine over a generator alphabet.

    Normal forms are shortlex-least geodesic words, so ``len(normal_form(w))``
    is the word metric |w| and the prefixes of a normal form are normal forms.
    Oracles are immutable after construction and safe to share.
    """

    kind: str = ""

    def __init__(self, alphabet: GeneratorAlphabet) -> None:
        self.alphabet = alphabet

    @property
    def is_free(self) -> bool:
        return False

    @property
    def is_tree(self) -> bool:
        """True when the Cayley graph is a tree (geodesics are unique)."""
        return self.is_free

    @abstractmethod
    def reduce(self, word: Word) -> Word:
        """Normal form of an already validated word."""

    @abstractmethod
    def describe(self) -> str:
        """Short human-readable description for reports."""

    def normal_form(self, word: Word) -> Word:
        return self.reduce(self.alphabet.validate(word))

    def multiply(self, u: Word, v: Word) -> Word:
        return self.reduce(self.alphabet.validate(u) + self.alphabet.validate(v))

    def invert(self, u: Word) -> Word:
        return self.reduce(inverse_word(self.alphabet.validate(u)))

    def word_length(self, word: Word) -> int:
        return len(self.normal_form(word))

    def distance(self, u: Word, v: Word) -> int:
        """d_G(u, v) = |u^-1 v|."""
        return len(self.reduce(inverse_word(u) + v))

    def is_identity(self, word: Word) -> bool:
        return not self.normal_form(word)

    def power(self, word: Word, n: int) -> Word:
        base = word if n >= 0 else inverse_word(word)
        return self.reduce(base * abs(n))

    def neighbors(self, element: Word) -> List[Word]:
        """Normal forms of element * x for every letter x, in shortlex letter order."""
        return [self.reduce(element + (x,)) for x in self.alphabet.letters]

    def ball_size_estimate(self, radius: int) -> Optional[int]:
        """Closed-form ball size when known, else None."""
        return None

    @property
    def radius_budget(self) -> Optional[int]:
        """Largest radius for which geodesics are exact; None means unbounded."""
        return None

    def key(self) -> Tuple[object, ...]:
        """Value identity: oracles describing the same group compare equal."""
        return (self.kind, self.describe())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GroupOracle) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())


class FreeGroup(GroupOracle):
    """The free group on ``rank`` generators; normal form is the freely reduced word."""

    kind = "free"

    def __init__(self, rank: int) -> None:
        super().__init__(GeneratorAlphabet(rank))
        self.rank = rank

    @property
    def is_free(self) -> bool:
        return True

    def reduce(self, word: Word) -> Word:
        return free_reduce(word)

    def neighbors(self, element: Word) -> List[Word]:
        last = element[-1] if element else 0
        out = []
        for x in self.alphabet.letters:
            if x == -last:
                out.append(element[:-1])
            else:
                out.append(element + (x,))
        return out

    def ball_size_estimate(self, radius: int) -> Optional[int]:
        if radius <= 0:
            return 1
        k = self.rank
        if k == 1:
            return 2 * radius + 1
        return 1 + k * ((2 * k - 1) ** radius - 1) * 2 // (2 * k - 2)

    def describe(self) -> str:
        return f"FreeGroup({self.rank})"


class FreeProductOfCyclics(GroupOracle):
    """Free product of cyclic groups; order 0 stands for an infinite cyclic factor.

    Each syllable x_i^e is stored with the exponent of least absolute value;
    when the order is even and |e| = n/2 the positive exponent wins, which is
    the shortlex choice.
    """

    kind = "free_product"

    def __init__(self, orders: Sequence[int]) -> None:
        if not orders:
            raise ValueError("A free product needs at least one factor")
        for n in orders:
            if n != 0 and n < 2:
                raise ValueError(f"Cyclic factor orders must be 0 (infinite) or >= 2, got {n}")
        super().__init__(GeneratorAlphabet(len(orders)))
        self.orders: Tuple[int, ...] = tuple(orders)

    @property
    def is_free(self) -> bool:
        return all(n == 0 for n in self.orders)

    def _canonical_exponent(self, gen: int, exponent: int) -> int:
        n = self.orders[gen - 1]
        if n == 0:
            return exponent
        e = exponent % n
        if 2 * e > n:
            e -= n
        return e

    def reduce(self, word: Word) -> Word:
        syllables: List[List[int]] = []
        for letter in word:
            gen = abs(letter)
            step = 1 if letter > 0 else -1
            if syllables and syllables[-1][0] == gen:
                syllables[-1][1] = self._canonical_exponent(gen, syllables[-1][1] + step)
                if syllables[-1][1] == 0:
                    syllables.pop()
            else:
                syllables.append([gen, self._canonical_exponent(gen, step)])
        out: List[int] = []
        for gen, e in syllables:
            out.extend([gen if e > 0 else -gen] * abs(e))
        return tuple(out)

    def describe(self) -> str:
        rendered = ", ".join("inf" if n == 0 else str(n) for n in self.orders)
        return f"FreeProductOfCyclics([{rendered}])"
