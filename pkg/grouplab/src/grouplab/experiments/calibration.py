"""Measure the quasi-geodesic constant of generated admissible paths."""

import logging

from grouplab.config.models import ExperimentConfig
from grouplab.contracting.calibration import (
    CALIBRATION_L,
    CALIBRATION_TAU,
    calibration_suite,
)
from grouplab.experiments.report import ExperimentReport, Status, fmt
from grouplab.runtime.logging import report_progress

logger = logging.getLogger(__name__)


def calibration_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    p = cfg.params
    report_progress(logger, f"generating {p.calibration_size} admissible specs (seed {cfg.seed})")
    result = calibration_suite(cfg.oracle, size=p.calibration_size, seed=cfg.seed)

    report = ExperimentReport("calibration", result.header())
    report.rows.extend(result.rows())
    report.fitted.update(
        {
            "lambda_cal": result.lambda_cal,
            "pass_rate": result.pass_rate,
            "L": CALIBRATION_L,
            "tau": CALIBRATION_TAU,
        }
    )
    if not result.passing:
        report.add("admissible specs", "0 passed", "> 0", Status.WARN)
        return report
    report.check(
        "lambda_cal",
        fmt(result.lambda_cal),
        f"<= {fmt(p.lambda_max)}",
        result.lambda_cal <= p.lambda_max,
    )
    return report
