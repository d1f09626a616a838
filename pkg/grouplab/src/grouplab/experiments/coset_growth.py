"""One-sided coset growth: the cosets gK and Hg grow at the rate of G."""

import logging
import math

from grouplab.config.models import ExperimentConfig
from grouplab.experiments.common import (
    relative_gap,
    require_free,
    require_infinite_index,
    subgroup_graphs,
)
from grouplab.experiments.report import ExperimentReport, fmt
from grouplab.runtime.logging import report_progress
from grouplab.subgroups.double_cosets import double_coset_growth
from grouplab.subgroups.stallings import trivial_subgroup

logger = logging.getLogger(__name__)


def coset_growth_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    oracle = require_free(cfg)
    H, K = subgroup_graphs(cfg)
    require_infinite_index("H", H)
    require_infinite_index("K", K)
    p = cfg.params
    r_min = p.r_min if p.r_min is not None else -1
    trivial = trivial_subgroup(oracle.alphabet.rank)

    report_progress(logger, f"left cosets gK up to radius {p.r_max}")
    left = double_coset_growth(trivial, K, p.r_max, r_min, cfg.budget.ball_cap)
    report_progress(logger, f"right cosets Hg up to radius {p.r_max}")
    right = double_coset_growth(H, trivial, p.r_max, r_min, cfg.budget.ball_cap)

    report = ExperimentReport("coset_growth", ["r", "gr_G", "gr_1K", "gr_H1"])
    for r in left.radii:
        report.rows.append(
            [str(r), str(left.orbital_counts[r]), str(left.counts[r]), str(right.counts[r])]
        )
    rate_G = left.orbital_rate
    report.fitted.update(
        {
            "omega_G": math.exp(rate_G),
            "omega_1K": math.exp(left.fitted_rate),
            "omega_H1": math.exp(right.fitted_rate),
        }
    )
    for name, table in (("left cosets gK", left), ("right cosets Hg", right)):
        gap = relative_gap(table.fitted_rate, rate_G)
        report.check(
            f"{name} grow like G",
            f"log rate {fmt(table.fitted_rate)} vs {fmt(rate_G)} (relative gap {fmt(gap)})",
            f"<= {fmt(p.tolerance)}",
            gap <= p.tolerance,
        )
    return report
