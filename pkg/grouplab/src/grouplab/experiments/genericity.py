"""How rare are barrier-free elements?

Tabulates, per radius, the share of the ball (and of the sphere) whose
geodesic carries no (epsilon, f)-barrier, and the share whose geodesic is at
least theta covered by long barrier-free pieces. Both shares should decay
exponentially.
"""

import logging
from typing import List

from grouplab.config.models import ExperimentConfig
from grouplab.contracting.barriers import (
    barrier_free_portion,
    barrier_statistics,
    is_degenerate,
)
from grouplab.core.cayley import ball
from grouplab.core.growth import LogLinearFit, trusted_window
from grouplab.experiments.common import decay_fit, require_free, required_word
from grouplab.experiments.report import ExperimentReport, Status, fmt
from grouplab.runtime.logging import report_progress

logger = logging.getLogger(__name__)

HEADER = ["r", "total", "barrier_free", "fraction", "sphere_fraction", "portion_fraction"]


def _decay_criterion(
    report: ExperimentReport, name: str, fit: LogLinearFit, decay_max: float, r2_min: float
) -> None:
    report.check(
        name,
        f"decay factor {fmt(fit.factor)}, R^2 {fmt(fit.r_squared)}",
        f"< {fmt(decay_max)}, R^2 >= {fmt(r2_min)}",
        fit.factor < decay_max and fit.r_squared >= r2_min,
    )


def genericity_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    oracle = require_free(cfg)
    p = cfg.params
    f = oracle.normal_form(required_word(cfg, "f"))
    report = ExperimentReport("genericity", list(HEADER))

    if is_degenerate(f, p.epsilon):
        report.add(
            "barrier parameters",
            f"|f| = {len(f)}, epsilon = {p.epsilon}",
            "|f| > 2 epsilon",
            Status.DEGENERATE,
        )
        report.notes.append("every element is barrier-free or none is; nothing to measure")
        return report

    report_progress(logger, f"barrier statistics up to radius {p.r_max}")
    stats = barrier_statistics(oracle, p.epsilon, f, p.r_max, M=0, cap=cfg.budget.ball_cap)

    report_progress(logger, f"barrier-free portions (theta={p.theta}, L_min={p.L_min})")
    portion_counts = [0] * (p.r_max + 1)
    for g in ball(oracle, p.r_max, cfg.budget.ball_cap):
        if barrier_free_portion(oracle, g, p.epsilon, f, p.L_min) >= p.theta:
            portion_counts[len(g)] += 1
    running = 0
    portion_fractions: List[float] = []
    for r, total in zip(stats.radii, stats.totals):
        running += portion_counts[r]
        portion_fractions.append(running / total)

    fractions = stats.fractions
    sphere_fractions = stats.sphere_fractions
    for r in stats.radii:
        report.rows.append(
            [
                str(r),
                str(stats.totals[r]),
                str(stats.barrier_free[r]),
                fmt(fractions[r]),
                fmt(sphere_fractions[r]),
                fmt(portion_fractions[r]),
            ]
        )

    window = trusted_window(p.r_max, p.r_min if p.r_min is not None else -1)
    free_fit = decay_fit(window, [fractions[r] for r in window])
    portion_fit = decay_fit(window, [portion_fractions[r] for r in window])
    report.fitted.update(
        {
            "barrier_free_decay": free_fit.factor,
            "barrier_free_r2": free_fit.r_squared,
            "portion_decay": portion_fit.factor,
            "portion_r2": portion_fit.r_squared,
        }
    )
    _decay_criterion(report, "barrier-free fraction decays", free_fit, p.decay_max, p.r2_min)
    _decay_criterion(report, "theta-portion fraction decays", portion_fit, p.decay_max, p.r2_min)

    if all(fr == 1.0 for fr in fractions):
        report.add(
            "barriers present",
            f"no (epsilon, f)-barrier within radius {p.r_max}",
            f"|f| small enough to fit in ball({p.r_max})",
            Status.DEGENERATE,
        )

    if p.theta == 1.0 and p.L_min == 1:
        nested = all(a <= b for a, b in zip(portion_fractions, fractions))
        report.check(
            "fully barrier-free portion implies barrier-free",
            "pointwise <=" if nested else "inclusion broken",
            "portion_fraction <= fraction",
            nested,
        )
    return report
