"""Experiment reports: the per-radius table, fitted quantities and verdicts."""

import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List

from jinja2 import Environment


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    DEGENERATE = "degenerate"
    PARTIAL = "partial"
    WARN = "warn"


# Overall status is the first of these present among the criteria
_PRECEDENCE = (Status.FAIL, Status.DEGENERATE, Status.PARTIAL, Status.WARN)


@dataclass(frozen=True)
class Criterion:
    name: str
    measured: str
    threshold: str
    status: Status


VERDICT_TEMPLATE = """\
experiment: {{ report.experiment }}
{% for c in report.criteria %}
[{{ c.status.value }}] {{ c.name }}
  measured:  {{ c.measured }}
  threshold: {{ c.threshold }}
{% endfor %}
{% if report.fitted %}
fitted:
{% for key, value in report.fitted.items() %}
  {{ key }} = {{ "%.6f"|format(value) }}
{% endfor %}
{% endif %}
{% for note in report.notes %}
note: {{ note }}
{% endfor %}
overall: {{ report.overall.value }}
"""

_env = Environment(trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
_verdict = _env.from_string(VERDICT_TEMPLATE)


def fmt(value: float) -> str:
    return f"{value:.6f}"


@dataclass
class ExperimentReport:
    """Everything an experiment produces; verdicts are computed from the table."""

    experiment: str
    header: List[str]
    rows: List[List[str]] = field(default_factory=list)
    fitted: Dict[str, float] = field(default_factory=dict)
    criteria: List[Criterion] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def add(self, name: str, measured: str, threshold: str, status: Status) -> None:
        self.criteria.append(Criterion(name, measured, threshold, status))

    def check(self, name: str, measured: str, threshold: str, ok: bool) -> None:
        self.add(name, measured, threshold, Status.PASS if ok else Status.FAIL)

    @property
    def overall(self) -> Status:
        present = {c.status for c in self.criteria}
        for status in _PRECEDENCE:
            if status in present:
                return status
        return Status.PASS

    @property
    def exit_status(self) -> int:
        """0 when every criterion passes, 1 on a failed criterion, 2 otherwise."""
        overall = self.overall
        if overall is Status.PASS:
            return 0
        if overall is Status.FAIL:
            return 1
        return 2

    def csv_text(self) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(self.header)
        writer.writerows(self.rows)
        return buffer.getvalue()

    def verdict_text(self) -> str:
        return _verdict.render(report=self)
