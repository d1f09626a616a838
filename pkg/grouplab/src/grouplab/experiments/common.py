"""Helpers shared by the experiments: oracle checks, subgroup graphs, fits."""

from typing import Optional, Sequence, Tuple

from grouplab.config.models import ExperimentConfig
from grouplab.contracting.axis import Axis, projection_diameter
from grouplab.core.alphabet import Word
from grouplab.core.cayley import geodesic
from grouplab.core.growth import LogLinearFit, fit_log_linear
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import ConfigError, PreconditionError
from grouplab.subgroups.stallings import (
    StallingsGraph,
    is_infinite_index,
    stallings_from_generators,
    subgroup_elements,
)

PROJECTION_RADIUS_MAX = 8


def require_free(cfg: ExperimentConfig, hypothesis: str = "G is a free group") -> GroupOracle:
    oracle = cfg.oracle
    if not oracle.is_free:
        raise PreconditionError(f"{oracle.describe()} is not a free group", hypothesis=hypothesis)
    return oracle


def subgroup_graphs(cfg: ExperimentConfig) -> Tuple[StallingsGraph, StallingsGraph]:
    oracle = cfg.oracle
    return (
        stallings_from_generators(oracle, cfg.H_words),
        stallings_from_generators(oracle, cfg.K_words),
    )


def require_infinite_index(label: str, graph: StallingsGraph) -> None:
    if not is_infinite_index(graph):
        raise PreconditionError(
            f"{label} has finite index {graph.num_vertices}",
            hypothesis=f"{label} has infinite index",
        )


def required_word(cfg: ExperimentConfig, name: str) -> Word:
    """A word parameter the experiment cannot run without."""
    text: Optional[str] = getattr(cfg.params, name)
    if text is None:
        raise ConfigError(f"this experiment needs params.{name}", field=f"params.{name}")
    return cfg.word(text)


def relative_gap(a: float, b: float) -> float:
    """|a - b| relative to |b|, or absolute when b is 0."""
    if b == 0:
        return abs(a)
    return abs(a - b) / abs(b)


def decay_fit(radii: Sequence[int], fractions: Sequence[float]) -> LogLinearFit:
    """Log-linear fit of fractions; fractions that are already 0 give a zero-factor fit."""
    fit = fit_log_linear(radii, fractions)
    if fit.points == 0:
        return LogLinearFit(slope=float("-inf"), intercept=float("-inf"), r_squared=1.0, points=0)
    return fit


def projection_radius(r: int) -> int:
    return min(PROJECTION_RADIUS_MAX, max(2, r))


def projection_spread(
    graph: StallingsGraph, oracle: GroupOracle, g: Word, r: int
) -> Tuple[int, int]:
    """Largest projection diameter of [1, h] onto Ax(g), h in the subgroup, within r // 2 and r.

    A bounded projection shows up as the two values agreeing.
    """
    axis = Axis(oracle, g)

    def spread(radius: int) -> int:
        paths = (geodesic(oracle, h) for h in subgroup_elements(graph, radius))
        return max((projection_diameter(axis, path) for path in paths), default=0)

    return spread(max(0, r // 2)), spread(r)
