"""Generator alphabets and words.

A word is a tuple of nonzero ints: ``i`` is the generator x_i and ``-i`` its
formal inverse. Word strings use ``a``, ``b``, ... for generators and the
uppercase letter for the inverse; ``a^3`` and ``a^-2`` are accepted as
shorthand, and ``""``, ``"1"`` or ``"e"`` denote the identity.
"""

import re
import string
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from grouplab.exceptions import InvalidWordError

Word = Tuple[int, ...]

IDENTITY: Word = ()

_TOKEN = re.compile(r"([a-zA-Z])(?:\^(-?\d+))?")


@dataclass(frozen=True)
class GeneratorAlphabet:
    """Generators x_1..x_rank with formal inverses and a fixed shortlex order."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1 or self.rank > 26:
            raise ValueError(f"Alphabet rank must be between 1 and 26, got {self.rank}")

    @property
    def letters(self) -> List[int]:
        """All letters in shortlex order: x_1, x_1^-1, x_2, x_2^-1, ..."""
        out: List[int] = []
        for i in range(1, self.rank + 1):
            out.extend((i, -i))
        return out

    def contains(self, letter: int) -> bool:
        return letter != 0 and abs(letter) <= self.rank

    @staticmethod
    def inverse(letter: int) -> int:
        return -letter

    @staticmethod
    def letter_rank(letter: int) -> int:
        """Position of a letter in the shortlex order."""
        return 2 * (abs(letter) - 1) + (1 if letter < 0 else 0)

    def shortlex_key(self, word: Word) -> Tuple[int, Tuple[int, ...]]:
        return len(word), tuple(self.letter_rank(x) for x in word)

    def validate(self, word: Word) -> Word:
        for position, letter in enumerate(word):
            if not self.contains(letter):
                raise InvalidWordError(
                    f"Letter {letter} is outside the rank-{self.rank} alphabet",
                    word=format_word(word) if _printable(word) else repr(word),
                    position=position,
                )
        return word

    def parse(self, text: str) -> Word:
        """Parse a word string and validate it against this alphabet."""
        word = parse_word(text)
        for position, letter in enumerate(word):
            if not self.contains(letter):
                raise InvalidWordError(
                    f"Letter {format_word((letter,))!r} is outside the rank-{self.rank} alphabet",
                    word=text,
                    position=position,
                )
        return word

    def sorted_words(self, words: Iterable[Word]) -> List[Word]:
        return sorted(words, key=self.shortlex_key)


def _printable(word: Sequence[int]) -> bool:
    return all(x != 0 and abs(x) <= 26 for x in word)


def parse_word(text: str) -> Word:
    """Parse ``"a b A"`` / ``"a^2bA"`` into a word tuple (not freely reduced)."""
    compact = "".join(text.split())
    if compact in ("", "1", "e"):
        return IDENTITY

    letters: List[int] = []
    pos = 0
    while pos < len(compact):
        match = _TOKEN.match(compact, pos)
        if not match:
            raise InvalidWordError("Malformed word", word=text, position=pos)
        char, exponent = match.group(1), match.group(2)
        index = string.ascii_lowercase.index(char.lower()) + 1
        letter = index if char.islower() else -index
        power = int(exponent) if exponent is not None else 1
        if power < 0:
            letter, power = -letter, -power
        letters.extend([letter] * power)
        pos = match.end()
    return tuple(letters)


def format_word(word: Sequence[int]) -> str:
    """Render a word tuple; the identity renders as the empty string."""
    out = []
    for letter in word:
        char = string.ascii_lowercase[abs(letter) - 1]
        out.append(char if letter > 0 else char.upper())
    return "".join(out)


def inverse_word(word: Sequence[int]) -> Word:
    """Formal inverse (no reduction)."""
    return tuple(-x for x in reversed(word))


def free_reduce(word: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs."""
    stack: List[int] = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def power(word: Word, n: int) -> Word:
    """Formal power u^n (no reduction); negative n uses the inverse."""
    if n < 0:
        return inverse_word(word) * -n
    return word * n
