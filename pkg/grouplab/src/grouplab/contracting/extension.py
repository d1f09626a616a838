"""Extension by one of three independent contracting elements.

Given g1 and g2, some f in the family makes the path labelled g1 f g2 (with the
f-piece running along g1.Ax(f)) an (L, tau)-admissible path.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence

from grouplab.contracting.admissible import (
    AdmissiblePathSpec,
    ViolationReport,
    admissible_check,
)
from grouplab.contracting.axis import Axis, projection_diameter
from grouplab.core.alphabet import Word, format_word
from grouplab.core.cayley import geodesic
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import ExtensionExhaustedError

logger = logging.getLogger(__name__)

INDEPENDENCE_WINDOW = 4


class ExtensionFamily:
    """Three pairwise independent axes with the admissibility thresholds L and tau.

    Independence is checked on construction: the axes are pairwise distinct and
    the projection of one axis window to another does not grow when the window
    doubles.
    """

    def __init__(self, oracle: GroupOracle, elements: Sequence[Word], L: float, tau: float) -> None:
        if len(elements) != 3:
            raise ValueError(f"An extension family needs three elements, got {len(elements)}")
        self.oracle = oracle
        self.elements: List[Word] = [oracle.normal_form(f) for f in elements]
        self.axes = [Axis(oracle, f) for f in self.elements]
        self.L = L
        self.tau = tau
        self._check_independent()

    def _check_independent(self) -> None:
        n = INDEPENDENCE_WINDOW
        for i, a in enumerate(self.axes):
            for j, b in enumerate(self.axes):
                if i == j:
                    continue
                if a.same_as(b):
                    raise ValueError(
                        f"Axes of {format_word(self.elements[i])} and "
                        f"{format_word(self.elements[j])} coincide"
                    )
                near = projection_diameter(a, b.window(n))
                far = projection_diameter(a, b.window(2 * n))
                if far > near:
                    raise ValueError(
                        f"Projection of Ax({format_word(self.elements[j])}) to "
                        f"Ax({format_word(self.elements[i])}) is unbounded ({near} -> {far})"
                    )


@dataclass
class ExtensionChoice:
    f: Word
    index: int
    spec: AdmissiblePathSpec
    report: ViolationReport


def extension_path(
    oracle: GroupOracle, g1: Word, f: Word, axis: Axis, g2: Word, L: float, tau: float
) -> AdmissiblePathSpec:
    """The path [1, g1] . g1[1, f] . g1 f[1, g2] with trivial end pieces."""
    g1 = oracle.normal_form(g1)
    g2 = oracle.normal_form(g2)
    g1f = oracle.multiply(g1, f)
    q1 = geodesic(oracle, g1)
    p1 = [oracle.multiply(g1, v) for v in geodesic(oracle, f)]
    q2 = [oracle.multiply(g1f, v) for v in geodesic(oracle, g2)]
    end = q2[-1]
    return AdmissiblePathSpec(
        oracle=oracle,
        segments=[[()], q1, p1, q2, [end]],
        axes=[None, axis.translated(g1), None],
        L=L,
        tau=tau,
    )


def extension_choose(g1: Word, g2: Word, family: ExtensionFamily) -> ExtensionChoice:
    """First f in the family whose path g1 f g2 is admissible."""
    reports: List[ViolationReport] = []
    for index, (f, axis) in enumerate(zip(family.elements, family.axes)):
        spec = extension_path(family.oracle, g1, f, axis, g2, family.L, family.tau)
        ok, report = admissible_check(spec)
        if ok:
            return ExtensionChoice(f=f, index=index, spec=spec, report=report)
        reports.append(report)
    raise ExtensionExhaustedError(
        f"No element of the family extends {format_word(g1) or '1'} . f . {format_word(g2) or '1'}",
        reports,
    )
