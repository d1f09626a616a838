"""(L, tau)-admissible paths: concatenations p_0 q_1 p_1 ... q_n p_n of geodesics
whose p-pieces run along contracting axes.

Checked clauses:

- ``LL``: every nontrivial p_i is longer than L.
- ``BP``: the projections of q_i and q_{i+1} to the axis of p_i have diameter
  at most tau; q_0 and q_{n+1} are the initial and terminal points.
- ``DISTINCT``: consecutive axes differ.
- ``ENDPOINT``: both ends of p_i lie on its axis.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from grouplab.contracting.axis import Axis, projection_diameter
from grouplab.core.alphabet import Word, format_word
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import MalformedPathError

logger = logging.getLogger(__name__)


@dataclass
class AdmissiblePathSpec:
    """Segments alternate p_0, q_1, p_1, ..., q_n, p_n; ``axes[i]`` belongs to p_i.

    A trivial p-piece (a single vertex) may have no axis.
    """

    oracle: GroupOracle
    segments: List[List[Word]]
    axes: List[Optional[Axis]]
    L: float
    tau: float

    @property
    def n(self) -> int:
        return len(self.segments) // 2

    def p(self, i: int) -> List[Word]:
        return self.segments[2 * i]

    def q(self, i: int) -> List[Word]:
        """q_i for 1 <= i <= n; q_0 and q_{n+1} are the endpoints of the whole path."""
        if i == 0:
            return [self.segments[0][0]]
        if i == self.n + 1:
            return [self.segments[-1][-1]]
        return self.segments[2 * i - 1]

    def vertices(self) -> List[Word]:
        """The whole path as one vertex sequence."""
        out: List[Word] = list(self.segments[0])
        for segment in self.segments[1:]:
            out.extend(segment[1:])
        return out


@dataclass(frozen=True)
class Violation:
    clause: str
    segment: int
    measured: float
    threshold: float

    def __str__(self) -> str:
        return (
            f"{self.clause} segment={self.segment} "
            f"measured={self.measured:g} threshold={self.threshold:g}"
        )


@dataclass
class ViolationReport:
    violations: List[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, clause: str, segment: int, measured: float, threshold: float) -> None:
        self.violations.append(Violation(clause, segment, measured, threshold))

    def __str__(self) -> str:
        if self.ok:
            return "admissible"
        return "\n".join(str(v) for v in self.violations)


def _validate(spec: AdmissiblePathSpec) -> None:
    oracle = spec.oracle
    if not spec.segments or len(spec.segments) % 2 == 0:
        raise MalformedPathError(
            f"expected an odd number of segments p_0 q_1 ... p_n, got {len(spec.segments)}"
        )
    if len(spec.axes) != spec.n + 1:
        raise MalformedPathError(f"expected {spec.n + 1} axes, got {len(spec.axes)}")

    previous_end: Optional[Word] = None
    for k, segment in enumerate(spec.segments):
        if not segment:
            raise MalformedPathError("empty segment", segment=k)
        path = [oracle.normal_form(v) for v in segment]
        if previous_end is not None and path[0] != previous_end:
            raise MalformedPathError(
                "segment does not start where the previous one ends", segment=k
            )
        for a, b in zip(path, path[1:]):
            if oracle.distance(a, b) != 1:
                raise MalformedPathError(
                    f"{format_word(a) or '1'} and {format_word(b) or '1'} are not adjacent",
                    segment=k,
                )
        if oracle.distance(path[0], path[-1]) != len(path) - 1:
            raise MalformedPathError("segment is not a geodesic", segment=k)
        previous_end = path[-1]

    for i in range(spec.n + 1):
        if len(spec.p(i)) > 1 and spec.axes[i] is None:
            raise MalformedPathError(f"p_{i} is nontrivial but has no axis", segment=2 * i)


def admissible_check(spec: AdmissiblePathSpec) -> Tuple[bool, ViolationReport]:
    """Check LL, BP, DISTINCT and ENDPOINT; malformed decompositions raise.

    LL applies to every nontrivial p_i, the end pieces p_0 and p_n included; a
    trivial piece is exempt. Violations are reported at segment index 2i.
    """
    _validate(spec)
    report = ViolationReport()

    for i in range(spec.n + 1):
        piece = spec.p(i)
        axis = spec.axes[i]
        length = len(piece) - 1
        if length > 0 and length <= spec.L:
            report.add("LL", 2 * i, length, spec.L)
        if axis is None:
            continue
        if not (axis.contains(piece[0]) and axis.contains(piece[-1])):
            report.add("ENDPOINT", 2 * i, 1, 0)
        for j in (i, i + 1):
            diameter = projection_diameter(axis, spec.q(j))
            if diameter > spec.tau:
                report.add("BP", 2 * i, diameter, spec.tau)

    for i in range(spec.n):
        a, b = spec.axes[i], spec.axes[i + 1]
        if a is not None and b is not None and a.same_as(b):
            report.add("DISTINCT", 2 * i + 2, 0, 1)

    if not report.ok:
        logger.debug("admissible check failed:\n%s", report)
    return report.ok, report


def quasi_geodesic_constant(oracle: GroupOracle, path: Sequence[Word]) -> float:
    """Least lambda >= 1 with len(sub) <= lambda * d(ends) + lambda for every subpath."""
    constant = 1.0
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            d = oracle.distance(path[i], path[j])
            constant = max(constant, (j - i) / (d + 1))
    return constant
