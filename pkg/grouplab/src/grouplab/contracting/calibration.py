"""Seeded suite of generated (L, tau)-admissible paths for measuring the quasi-geodesic constant."""

import logging
import random
from dataclasses import dataclass, field
from typing import List, Sequence

from grouplab.contracting.admissible import (
    AdmissiblePathSpec,
    ViolationReport,
    admissible_check,
    quasi_geodesic_constant,
)
from grouplab.contracting.axis import Axis
from grouplab.core.alphabet import Word, format_word
from grouplab.core.cayley import geodesic
from grouplab.core.oracles import GroupOracle

logger = logging.getLogger(__name__)

CALIBRATION_ROOTS = ("ab", "aab", "abb")
CALIBRATION_L = 5.0
CALIBRATION_TAU = 1.0


@dataclass
class CalibrationEntry:
    label: List[Word]
    passed: bool
    constant: float
    report: ViolationReport


@dataclass
class CalibrationResult:
    entries: List[CalibrationEntry] = field(default_factory=list)

    @property
    def passing(self) -> List[CalibrationEntry]:
        return [e for e in self.entries if e.passed]

    @property
    def lambda_cal(self) -> float:
        """Largest quasi-geodesic constant among passing paths (1.0 when none pass)."""
        return max((e.constant for e in self.passing), default=1.0)

    @property
    def pass_rate(self) -> float:
        return len(self.passing) / len(self.entries) if self.entries else 0.0

    def header(self) -> List[str]:
        return ["index", "pieces", "label", "admissible", "lambda"]

    def rows(self) -> List[List[str]]:
        return [
            [
                str(i),
                str(len(e.label) // 2 + 1),
                ".".join(format_word(w) or "1" for w in e.label),
                "1" if e.passed else "0",
                f"{e.constant:.6f}",
            ]
            for i, e in enumerate(self.entries)
        ]


def long_power(oracle: GroupOracle, root: Word, L: float) -> Word:
    """Smallest positive power of root longer than L."""
    k = 1
    while len(oracle.power(root, k)) <= L:
        k += 1
    return oracle.power(root, k)


def _random_connector(oracle: GroupOracle, rng: random.Random, avoid_first: int) -> Word:
    """Random reduced word of length 1..3 that does not start with ``avoid_first``."""
    letters = oracle.alphabet.letters
    length = rng.randint(1, 3)
    word: List[int] = []
    while len(word) < length:
        banned = avoid_first if not word else -word[-1]
        choices = [x for x in letters if x != banned]
        word.append(rng.choice(choices))
    return tuple(word)


def build_spec(
    oracle: GroupOracle, pieces: Sequence[Word], roots: Sequence[Word], L: float, tau: float
) -> AdmissiblePathSpec:
    """Lay the labels p_0, q_1, ..., p_n end to end; p_i runs along position_i . Ax(root_i)."""
    segments: List[List[Word]] = []
    axes = []
    position: Word = ()
    for k, label in enumerate(pieces):
        segments.append([oracle.multiply(position, v) for v in geodesic(oracle, label)])
        if k % 2 == 0:
            axes.append(Axis(oracle, roots[k // 2], position))
        position = oracle.multiply(position, label)
    return AdmissiblePathSpec(oracle=oracle, segments=segments, axes=axes, L=L, tau=tau)


def calibration_suite(
    oracle: GroupOracle,
    size: int = 100,
    seed: int = 0,
    roots: Sequence[str] = CALIBRATION_ROOTS,
    L: float = CALIBRATION_L,
    tau: float = CALIBRATION_TAU,
) -> CalibrationResult:
    """Generate ``size`` paths with 1 to 3 connectors and measure each one.

    Each p-piece is a power of a root longer than L; each connector q_i is a
    random reduced word that leaves p_{i-1} without backtracking. Connectors may
    still fold back into the following p-piece, which is what the admissibility
    check has to catch.
    """
    rng = random.Random(seed)
    root_words = [oracle.alphabet.parse(r) for r in roots]
    powers = [long_power(oracle, r, L) for r in root_words]
    result = CalibrationResult()
    for _ in range(size):
        n = rng.randint(1, 3)
        chosen = [rng.randrange(len(root_words)) for _ in range(n + 1)]
        pieces: List[Word] = []
        for i, index in enumerate(chosen):
            if i > 0:
                pieces.append(_random_connector(oracle, rng, -pieces[-1][-1]))
            pieces.append(powers[index])
        spec = build_spec(oracle, pieces, [root_words[i] for i in chosen], L, tau)
        passed, report = admissible_check(spec)
        constant = quasi_geodesic_constant(oracle, spec.vertices())
        result.entries.append(
            CalibrationEntry(label=pieces, passed=passed, constant=constant, report=report)
        )
    logger.info(
        "calibration: %d/%d admissible, lambda_cal=%.3f",
        len(result.passing),
        len(result.entries),
        result.lambda_cal,
    )
    return result
