"""Ping-pong check that <H, gKg^-1> is the free product H * gKg^-1.

Alternating products of nontrivial H-syllables h and conjugated K-syllables
g k g^-1 are enumerated up to a syllable count and a total formal length; every
one of them must be a nontrivial element.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from grouplab.config.models import ExperimentConfig
from grouplab.core.alphabet import Word, format_word
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import ConfigError
from grouplab.experiments.common import (
    projection_radius,
    projection_spread,
    require_free,
    require_infinite_index,
    required_word,
    subgroup_graphs,
)
from grouplab.experiments.report import ExperimentReport, Status
from grouplab.runtime.logging import report_progress
from grouplab.subgroups.stallings import StallingsGraph, subgroup_elements

logger = logging.getLogger(__name__)

EXAMPLES_KEPT = 5

# (element, formal length)
Syllable = Tuple[Word, int]


@dataclass
class _Walk:
    oracle: GroupOracle
    syllables: Tuple[List[Syllable], List[Syllable]]
    max_syllables: int
    max_length: int
    max_words: int
    words: List[int] = field(default_factory=list)
    trivial: List[int] = field(default_factory=list)
    shortest: List[int] = field(default_factory=list)
    examples: List[str] = field(default_factory=list)
    visited: int = 0
    exhausted: bool = False

    def __post_init__(self) -> None:
        n = self.max_syllables + 1
        self.words = [0] * n
        self.trivial = [0] * n
        self.shortest = [-1] * n

    def run(self) -> None:
        for side in (0, 1):
            self._extend((), 0, 0, side, [])
            if self.exhausted:
                return

    def _extend(self, element: Word, length: int, count: int, side: int, trail: List[str]) -> None:
        if count == self.max_syllables:
            return
        for syllable, size in self.syllables[side]:
            if length + size > self.max_length:
                continue
            if self.visited >= self.max_words:
                self.exhausted = True
                return
            self.visited += 1
            product = self.oracle.multiply(element, syllable)
            n = count + 1
            self.words[n] += 1
            if self.shortest[n] < 0 or len(product) < self.shortest[n]:
                self.shortest[n] = len(product)
            label = trail + [format_word(syllable)]
            if not product:
                self.trivial[n] += 1
                if len(self.examples) < EXAMPLES_KEPT:
                    self.examples.append(".".join(label))
            self._extend(product, length + size, n, 1 - side, label)
            if self.exhausted:
                return


def _check_bounded_projection(
    report: ExperimentReport,
    H: StallingsGraph,
    K: StallingsGraph,
    oracle: GroupOracle,
    g: Word,
    r: int,
) -> None:
    """H and K project to Ax(g) with a diameter that does not grow between r // 2 and r."""
    spreads = {
        label: projection_spread(graph, oracle, g, r) for label, graph in (("H", H), ("K", K))
    }
    measured = ", ".join(f"{label}: {near} -> {far}" for label, (near, far) in spreads.items())
    threshold = f"no growth from radius {r // 2} to {r}"
    if any(far > near for near, far in spreads.values()):
        report.add("bounded projection to Ax(g)", measured, threshold, Status.DEGENERATE)
        report.notes.append("g is not independent of H and K; raise g to a higher power")
    else:
        report.check("bounded projection to Ax(g)", measured, threshold, True)


def free_product_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    oracle = require_free(cfg)
    H, K = subgroup_graphs(cfg)
    require_infinite_index("H", H)
    require_infinite_index("K", K)
    p = cfg.params
    g = oracle.normal_form(required_word(cfg, "g"))
    if not g:
        raise ConfigError("g must be nontrivial", field="params.g")

    report = ExperimentReport("free_product", ["syllables", "words", "trivial", "min_length"])
    if not H.edges() or not K.edges():
        report.notes.append("H or K is trivial: there are no alternating words")
        report.check("trivial alternating words", "0 (vacuous)", "0", True)
        return report

    _check_bounded_projection(report, H, K, oracle, g, projection_radius(p.max_length))
    g_inv = oracle.invert(g)
    h_syllables = [(h, len(h)) for h in subgroup_elements(H, p.max_length) if h]
    k_syllables = []
    for k in subgroup_elements(K, p.max_length - 2 * len(g)):
        if k:
            conjugate = oracle.multiply(oracle.multiply(g, k), g_inv)
            k_syllables.append((conjugate, 2 * len(g) + len(k)))

    report_progress(
        logger,
        f"{len(h_syllables)} H-syllables, {len(k_syllables)} K-syllables, "
        f"length <= {p.max_length}",
    )
    walk = _Walk(
        oracle=oracle,
        syllables=(h_syllables, k_syllables),
        max_syllables=p.max_syllables,
        max_length=p.max_length,
        max_words=p.max_words,
    )
    walk.run()

    for n in range(1, p.max_syllables + 1):
        report.rows.append(
            [str(n), str(walk.words[n]), str(walk.trivial[n]), str(walk.shortest[n])]
        )
    trivial = sum(walk.trivial)
    report.fitted["words_checked"] = float(walk.visited)
    report.notes.extend(f"trivial word: {w}" for w in walk.examples)

    if trivial:
        report.check("trivial alternating words", str(trivial), "0", False)
    elif walk.exhausted:
        report.add(
            "trivial alternating words",
            f"0 among the first {walk.visited} words",
            f"0 among all words up to length {p.max_length}",
            Status.PARTIAL,
        )
        report.notes.append(f"word budget of {p.max_words} reached")
    else:
        report.check("trivial alternating words", "0", "0", True)
    return report
