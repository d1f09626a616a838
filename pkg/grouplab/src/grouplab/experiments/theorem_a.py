"""Double coset growth against orbital growth: gr_HK(r) >= delta * gr_G(r - r0).

For H, K of infinite index in a free group the double cosets meeting the ball
B(r) should be a positive proportion of the elements of B(r - r0), and the two
growth rates should agree.
"""

import logging
import math

from grouplab.config.models import ExperimentConfig
from grouplab.core.growth import fit_growth, trusted_window
from grouplab.exceptions import ConfigError
from grouplab.experiments.common import (
    relative_gap,
    require_free,
    require_infinite_index,
    subgroup_graphs,
)
from grouplab.experiments.report import ExperimentReport, fmt
from grouplab.runtime.logging import report_progress
from grouplab.subgroups.double_cosets import double_coset_growth

logger = logging.getLogger(__name__)


def theorem_a_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    require_free(cfg)
    H, K = subgroup_graphs(cfg)
    require_infinite_index("H", H)
    require_infinite_index("K", K)

    p = cfg.params
    r0 = p.r0 or 0
    r_min = p.r_min if p.r_min is not None else -1
    if r0 > p.r_max:
        raise ConfigError(f"r0 = {r0} exceeds r_max = {p.r_max}", field="params.r0")

    report_progress(logger, f"counting double cosets up to radius {p.r_max}")
    table = double_coset_growth(H, K, p.r_max, r_min, cfg.budget.ball_cap)
    orbital = fit_growth(table.radii, table.orbital_counts, r_min)

    report = ExperimentReport("theorem_a", ["r", "gr_G", "gr_HK", "ratio"])
    shifted = {}
    for r in table.radii:
        base = orbital.count(r - r0)
        ratio = table.counts[r] / base if base else None
        if ratio is not None:
            shifted[r] = ratio
        report.rows.append(
            [str(r), str(base), str(table.counts[r]), fmt(ratio) if ratio is not None else ""]
        )

    window = [r for r in trusted_window(p.r_max, r_min) if r in shifted]
    if not window:
        window = sorted(shifted)
    delta = min(shifted[r] for r in window)
    gap = relative_gap(table.fitted_rate, table.orbital_rate)

    report.fitted.update(
        {
            "omega_G": math.exp(table.orbital_rate),
            "omega_HK": math.exp(table.fitted_rate),
            "M0": orbital.fitted_bounds[0],
            "M1": orbital.fitted_bounds[1],
            "delta": delta,
        }
    )
    report.check(
        "ratio bounded below",
        f"min ratio {fmt(delta)} over r in [{window[0]}, {window[-1]}]",
        f"> {fmt(p.delta_min)}",
        delta > p.delta_min,
    )
    report.check(
        "growth rates agree",
        f"log omega_HK {fmt(table.fitted_rate)} vs log omega_G {fmt(table.orbital_rate)}"
        f" (relative gap {fmt(gap)})",
        f"<= {fmt(p.tolerance)}",
        gap <= p.tolerance,
    )
    if r0:
        report.notes.append(f"ratio is gr_HK(r) / gr_G(r - {r0})")
    return report
