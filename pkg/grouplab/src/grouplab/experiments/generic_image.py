"""Images of generic sets in the double coset space.

If A is exponentially generic in balls and double cosets grow at a positive
rate delta relative to the group, the double cosets meeting A should also be
generic: the complement fraction should stay under (c / delta) * eps^r, where c
and eps fit the complement of A in balls.
"""

import logging
import math
from typing import Callable, Dict, List, Optional

from grouplab.config.models import ExperimentConfig
from grouplab.contracting.barriers import has_barrier
from grouplab.core.alphabet import Word
from grouplab.core.cayley import ball, geodesic
from grouplab.core.growth import trusted_window
from grouplab.exceptions import PreconditionError
from grouplab.experiments.common import (
    decay_fit,
    require_free,
    require_infinite_index,
    required_word,
    subgroup_graphs,
)
from grouplab.experiments.report import ExperimentReport, Status, fmt
from grouplab.runtime.logging import report_progress
from grouplab.subgroups.double_cosets import canonical_rep, double_coset_growth

logger = logging.getLogger(__name__)

Predicate = Callable[[Word], bool]


def generic_predicate(cfg: ExperimentConfig) -> Predicate:
    """The set A named by params.generic_set."""
    kind = cfg.params.generic_set
    if kind == "all":
        return lambda g: True
    if kind == "none":
        return lambda g: False
    oracle = cfg.oracle
    f = required_word(cfg, "f")
    epsilon = cfg.params.epsilon
    return lambda g: has_barrier(oracle, geodesic(oracle, g), epsilon, f) is not None


def generic_image_check(
    cfg: ExperimentConfig, A: Optional[Predicate] = None
) -> ExperimentReport:
    oracle = require_free(cfg)
    H, K = subgroup_graphs(cfg)
    require_infinite_index("H", H)
    require_infinite_index("K", K)
    p = cfg.params
    r_min = p.r_min if p.r_min is not None else -1
    if A is None:
        A = generic_predicate(cfg)

    growth = double_coset_growth(H, K, p.r_max, r_min, cfg.budget.ball_cap)
    delta = growth.delta
    if delta <= p.delta_min:
        raise PreconditionError(
            f"double coset ratio only reaches {delta:.6f}",
            hypothesis=f"gr_HK(r) >= delta gr_G(r) with delta > {p.delta_min}",
        )

    report_progress(logger, f"classifying ball({p.r_max}) by double coset and membership in A")
    elements = ball(oracle, p.r_max, cfg.budget.ball_cap)
    in_A = [A(g) for g in elements]
    rep_of: List[Word] = [canonical_rep(H, K, g) for g in elements]
    meets: Dict[Word, bool] = {}
    for rep, member in zip(rep_of, in_A):
        meets[rep] = meets.get(rep, False) or member

    ball_fractions: List[float] = []
    image_fractions: List[float] = []
    coset_counts: List[int] = []
    total = hits = 0
    seen: Dict[Word, None] = {}
    index = 0
    for r in range(p.r_max + 1):
        while index < len(elements) and len(elements[index]) <= r:
            total += 1
            hits += in_A[index]
            seen.setdefault(rep_of[index], None)
            index += 1
        ball_fractions.append(hits / total)
        coset_counts.append(len(seen))
        image_fractions.append(sum(meets[rep] for rep in seen) / len(seen))

    window = trusted_window(p.r_max, r_min)
    fit = decay_fit(window, [1.0 - ball_fractions[r] for r in window])
    eps = fit.factor
    c = math.exp(fit.intercept)
    bounds = [min(1.0, c / delta * eps**r) for r in range(p.r_max + 1)]

    report = ExperimentReport(
        "generic_image",
        ["r", "ball_fraction", "cosets", "image_fraction", "complement_bound"],
    )
    for r in range(p.r_max + 1):
        report.rows.append(
            [
                str(r),
                fmt(ball_fractions[r]),
                str(coset_counts[r]),
                fmt(image_fractions[r]),
                fmt(bounds[r]),
            ]
        )
    report.fitted.update({"delta": delta, "eps": eps, "c": c, "r_squared": fit.r_squared})
    report.notes.append(
        f"precondition checked: delta {fmt(delta)} > {fmt(p.delta_min)} only; "
        "the growth rate of H\\G/K against G is the theorem_a experiment"
    )

    generic = eps < 1.0 and fit.r_squared >= p.r2_min
    if not generic:
        report.add(
            "A generic in balls",
            f"complement decay {fmt(eps)}, R^2 {fmt(fit.r_squared)}",
            f"< 1, R^2 >= {fmt(p.r2_min)}",
            Status.WARN,
        )
        report.notes.append("A is not exponentially generic; image fractions are raw")
        return report

    report.check(
        "A generic in balls",
        f"complement decay {fmt(eps)}, R^2 {fmt(fit.r_squared)}",
        f"< 1, R^2 >= {fmt(p.r2_min)}",
        True,
    )
    worst = max(1.0 - image_fractions[r] - bounds[r] for r in window)
    report.check(
        "image complement under (c / delta) eps^r",
        f"largest excess {fmt(max(worst, 0.0))}",
        "0",
        worst <= 1e-12,
    )
    return report
