"""Orbital growth of the group itself: ball and sphere sizes with the fitted rate.

Unlike the other experiments this one runs on any oracle, including free
products of cyclic groups and small cancellation groups.
"""

import logging

from grouplab.config.models import ExperimentConfig
from grouplab.core.cayley import growth_table
from grouplab.experiments.report import ExperimentReport, fmt
from grouplab.runtime.logging import report_progress

logger = logging.getLogger(__name__)


def growth_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    oracle = cfg.oracle
    p = cfg.params
    r_min = p.r_min if p.r_min is not None else -1

    report_progress(logger, f"enumerating balls of {oracle.describe()} up to radius {p.r_max}")
    table = growth_table(oracle, p.r_max, cfg.budget.ball_cap, r_min)

    report = ExperimentReport("growth", ["r", "gr_G", "sphere"])
    for r, count, sphere in zip(table.radii, table.counts, table.sphere_counts):
        report.rows.append([str(r), str(count), str(sphere)])

    lower, upper = table.fitted_bounds
    report.fitted.update(
        {
            "omega_G": table.growth_factor,
            "log_rate": table.fitted_rate,
            "c_lower": lower,
            "c_upper": upper,
            "r_squared": table.r_squared,
        }
    )
    report.check(
        "ball sizes grow purely exponentially",
        f"R^2 {fmt(table.r_squared)}",
        f">= {fmt(p.r2_min)}",
        table.r_squared >= p.r2_min,
    )

    expected = [oracle.ball_size_estimate(r) for r in table.radii]
    if None not in expected:
        mismatches = [r for r, e, c in zip(table.radii, expected, table.counts) if e != c]
        report.check(
            "ball sizes match the closed form",
            f"{len(mismatches)} radii differ",
            "0",
            not mismatches,
        )
    if table.fitted_rate < 1e-9:
        report.notes.append("no exponential growth detected (fitted rate is 0)")
    return report
