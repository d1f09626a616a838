"""Growth tables and the log-linear fits behind rate, constant and decay estimates."""

import math
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np


@dataclass(frozen=True)
class LogLinearFit:
    """Least-squares fit of log(value) = intercept + slope * r."""

    slope: float
    intercept: float
    r_squared: float
    points: int

    @property
    def factor(self) -> float:
        """exp(slope): growth factor (or decay factor when < 1) per unit radius."""
        return math.exp(self.slope)


def trusted_window(r_max: int, r_min: int = -1, min_points: int = 4) -> List[int]:
    """Radii used for fits: the upper half [ceil(r_max/2), r_max], at least ``min_points`` long.

    An explicit ``r_min`` (>= 0) replaces the upper-half rule.
    """
    start = r_min if r_min >= 0 else (r_max + 1) // 2
    start = min(start, max(0, r_max - min_points + 1))
    return list(range(start, r_max + 1))


def fit_log_linear(radii: Sequence[int], values: Sequence[float]) -> LogLinearFit:
    """Fit log-values against radii, ignoring nonpositive values.

    Fewer than two usable points gives a flat fit with ``r_squared`` 1.0.
    """
    pairs = [(r, v) for r, v in zip(radii, values) if v > 0]
    if len(pairs) < 2:
        intercept = math.log(pairs[0][1]) if pairs else 0.0
        return LogLinearFit(slope=0.0, intercept=intercept, r_squared=1.0, points=len(pairs))

    x = np.array([r for r, _ in pairs], dtype=float)
    y = np.log(np.array([v for _, v in pairs], dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    predicted = slope * x + intercept
    ss_res = float(np.sum((y - predicted) ** 2))
    ss_tot = float(np.sum((y - np.mean(y)) ** 2))
    r_squared = 1.0 - ss_res / ss_tot if ss_tot > 1e-15 else 1.0
    return LogLinearFit(
        slope=float(slope), intercept=float(intercept), r_squared=r_squared, points=len(pairs)
    )


@dataclass
class GrowthTable:
    """gr(r) for r = 0..r_max with the fitted rate and purely-exponential constants."""

    radii: List[int]
    counts: List[int]
    sphere_counts: List[int] = field(default_factory=list)
    fitted_rate: float = 0.0
    fitted_bounds: Tuple[float, float] = (0.0, 0.0)
    r_squared: float = 1.0

    @property
    def r_max(self) -> int:
        return self.radii[-1]

    @property
    def growth_factor(self) -> float:
        return math.exp(self.fitted_rate)

    def count(self, r: int) -> int:
        """gr(r), with gr(r) = 0 for negative radii."""
        if r < 0:
            return 0
        return self.counts[min(r, self.r_max)]

    def header(self) -> List[str]:
        return ["r", "count"]

    def rows(self) -> List[List[str]]:
        return [[str(r), str(c)] for r, c in zip(self.radii, self.counts)]


def fit_growth(radii: Sequence[int], counts: Sequence[int], r_min: int = -1) -> GrowthTable:
    """Build a GrowthTable: rate over the trusted window, bounds over every radius."""
    r_max = radii[-1]
    window = trusted_window(r_max, r_min)
    fit = fit_log_linear(window, [counts[r] for r in window])
    rate = fit.slope
    ratios = [c / math.exp(rate * r) for r, c in zip(radii, counts)]
    spheres = [counts[0]] + [counts[r] - counts[r - 1] for r in range(1, len(counts))]
    return GrowthTable(
        radii=list(radii),
        counts=list(counts),
        sphere_counts=spheres,
        fitted_rate=rate,
        fitted_bounds=(min(ratios), max(ratios)),
        r_squared=fit.r_squared,
    )
