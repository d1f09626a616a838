"""Contracting geometry: axes, projections, barriers and admissible paths."""

from grouplab.contracting.admissible import (
    AdmissiblePathSpec,
    Violation,
    ViolationReport,
    admissible_check,
    quasi_geodesic_constant,
)
from grouplab.contracting.axis import (
    Axis,
    contraction_constant,
    distance_to_axis,
    primitive_root,
    project,
    projection_diameter,
)
from grouplab.contracting.barriers import (
    BarrierRecord,
    BarrierStatistics,
    barrier_constants,
    barrier_free_portion,
    barrier_free_set,
    barrier_statistics,
    has_barrier,
)
from grouplab.contracting.calibration import CalibrationResult, calibration_suite
from grouplab.contracting.extension import ExtensionChoice, ExtensionFamily, extension_choose

__all__ = [
    "AdmissiblePathSpec",
    "Axis",
    "BarrierRecord",
    "BarrierStatistics",
    "CalibrationResult",
    "ExtensionChoice",
    "ExtensionFamily",
    "Violation",
    "ViolationReport",
    "admissible_check",
    "barrier_constants",
    "barrier_free_portion",
    "barrier_free_set",
    "barrier_statistics",
    "calibration_suite",
    "contraction_constant",
    "distance_to_axis",
    "extension_choose",
    "has_barrier",
    "primitive_root",
    "project",
    "projection_diameter",
    "quasi_geodesic_constant",
]
