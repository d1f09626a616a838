"""Injecting a ball into double cosets via s(t) = g_H^M a_t t b_t g_K^M.

a_t and b_t come from the extension family, so s(t) labels an admissible path.
Distinct t should land in distinct double cosets up to a fiber of size N_0.
"""

import logging
from collections import defaultdict
from typing import Dict, List

from grouplab.config.models import ExperimentConfig
from grouplab.contracting.axis import primitive_root
from grouplab.contracting.extension import ExtensionFamily, extension_choose
from grouplab.core.alphabet import Word, format_word
from grouplab.core.cayley import ball
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import ConfigError, ExtensionExhaustedError, PreconditionError
from grouplab.experiments.common import (
    projection_radius,
    projection_spread,
    require_free,
    required_word,
    subgroup_graphs,
)
from grouplab.experiments.report import ExperimentReport
from grouplab.runtime.logging import report_progress
from grouplab.subgroups.double_cosets import canonical_rep
from grouplab.subgroups.stallings import StallingsGraph, subgroup_intersects_cyclic

logger = logging.getLogger(__name__)


def _check_cyclic(label: str, graph: StallingsGraph, oracle: GroupOracle, g: Word) -> None:
    n = subgroup_intersects_cyclic(graph, primitive_root(oracle, g))
    if n is not None:
        raise PreconditionError(
            f"{label} contains the power {n} of the root of {format_word(g)}",
            hypothesis=f"<g_{label}> meets {label} trivially",
        )


def _projection_bound(
    label: str, graph: StallingsGraph, oracle: GroupOracle, g: Word, r: int
) -> int:
    """Projection diameter of [1, h], h in the subgroup, onto Ax(g); it must not grow with r."""
    near, far = projection_spread(graph, oracle, g, r)
    if far > near:
        raise PreconditionError(
            f"projections of {label} to Ax({format_word(g)}) grow from {near} to {far}",
            hypothesis=f"{label} has bounded projection to the axis of g_{label}",
        )
    return far


def injection_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    oracle = require_free(cfg)
    H, K = subgroup_graphs(cfg)
    p = cfg.params
    g_H = oracle.normal_form(required_word(cfg, "g_H"))
    g_K = oracle.normal_form(cfg.word(p.g_K)) if p.g_K is not None else g_H
    if not g_H or not g_K:
        raise ConfigError("g_H and g_K must be nontrivial", field="params.g_H")

    _check_cyclic("H", H, oracle, g_H)
    _check_cyclic("K", K, oracle, g_K)
    # <g> meets H and K trivially, so each elementary factor of N_0 is 1
    N0 = 1

    reach = projection_radius(p.r_max)
    D_H = _projection_bound("H", H, oracle, g_H, reach)
    D_K = _projection_bound("K", K, oracle, g_K, reach)

    try:
        family = ExtensionFamily(oracle, cfg.F_words, p.L, p.tau)
    except ValueError as e:
        raise ConfigError(str(e), field="params.F") from e

    M = p.M or 1
    head = oracle.power(g_H, M)
    tail = oracle.power(g_K, M)
    radius = p.r_max - (p.r0 or 0)

    report = ExperimentReport("injection", ["r", "elements", "double_cosets", "max_fiber"])
    report.fitted.update({"N0": float(N0), "D_H": float(D_H), "D_K": float(D_K), "M": float(M)})

    if radius < 0:
        report.notes.append(f"r_max - r0 = {radius} < 0: no elements to inject")
        report.check("fiber size", "0", f"<= {N0}", True)
        return report

    report_progress(logger, f"injecting ball({radius}) with M={M}")
    fibers: Dict[Word, List[Word]] = defaultdict(list)
    elements = 0
    worst = 0
    by_length: Dict[int, List[Word]] = defaultdict(list)
    for t in ball(oracle, radius, cfg.budget.ball_cap):
        by_length[len(t)].append(t)
    for r in range(radius + 1):
        for t in by_length[r]:
            try:
                a = extension_choose(head, t, family).f
                b = extension_choose(t, tail, family).f
            except ExtensionExhaustedError as e:
                raise ConfigError(str(e), field="params.F") from e
            s = head
            for piece in (a, t, b, tail):
                s = oracle.multiply(s, piece)
            fiber = fibers[canonical_rep(H, K, s)]
            fiber.append(t)
            worst = max(worst, len(fiber))
            elements += 1
        report.rows.append([str(r), str(elements), str(len(fibers)), str(worst)])
        report_progress(logger, f"radius {r}: {elements} elements, max fiber {worst}", "debug")

    report.check("fiber size", f"max fiber {worst}", f"<= N0 = {N0}", worst <= N0)
    return report
