"""Run manifests: what was run, from which bytes, into which directory."""

import hashlib
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from grouplab import __version__
from grouplab.config.loader import parse_config, render_config
from grouplab.exceptions import ConfigError, GroupLabError
from grouplab.experiments import get_experiment
from grouplab.experiments.report import ExperimentReport
from grouplab.runtime.logging import report_progress

logger = logging.getLogger(__name__)

TABLE_FILE = "table.csv"
VERDICT_FILE = "verdict.txt"
ECHO_FILE = "config.lab.echo"
MANIFEST_FILE = "manifest.json"


def _now() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def sha256_of(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class RunManifest(BaseModel):
    """Everything needed to reproduce a run; written next to its outputs."""

    config_path: str
    config_sha256: str
    experiment: Optional[str] = None
    seed: Optional[int] = None
    radius: Optional[int] = None
    output_dir: str
    tool_version: str = __version__
    started: Optional[str] = None
    finished: Optional[str] = None
    artifacts: List[str] = Field(default_factory=list)
    status: Optional[int] = None
    error: Optional[str] = None

    @classmethod
    def for_config(
        cls,
        config_path: Path,
        output_dir: Path,
        experiment: Optional[str] = None,
        seed: Optional[int] = None,
        radius: Optional[int] = None,
    ) -> "RunManifest":
        return cls(
            config_path=str(config_path),
            config_sha256=sha256_of(Path(config_path).read_bytes()),
            experiment=experiment,
            seed=seed,
            radius=radius,
            output_dir=str(output_dir),
        )

    def overrides(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        if self.seed is not None:
            out["seed"] = self.seed
        if self.radius is not None:
            out["params.r_max"] = self.radius
        return out


def execute(manifest: RunManifest) -> ExperimentReport:
    """Run the manifest's experiment and write its artifacts. Raises on any error."""
    data = Path(manifest.config_path).read_bytes()
    digest = sha256_of(data)
    if digest != manifest.config_sha256:
        raise ConfigError(
            f"config changed since the manifest was made (sha256 {digest[:12]}, "
            f"expected {manifest.config_sha256[:12]})",
            file_path=manifest.config_path,
        )

    cfg = parse_config(data.decode("utf-8"), manifest.config_path, manifest.overrides())
    name = manifest.experiment or cfg.experiment
    if not name:
        raise ConfigError(
            "no experiment named (use !experiment or --experiment)",
            file_path=manifest.config_path,
        )
    experiment = get_experiment(name)
    manifest.experiment = name

    report_progress(logger, f"running {name} on {cfg.oracle.describe()}")
    report = experiment.run(cfg)

    out = Path(manifest.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    artifacts = {
        TABLE_FILE: report.csv_text(),
        VERDICT_FILE: report.verdict_text(),
        ECHO_FILE: render_config(cfg, name),
    }
    for filename, text in artifacts.items():
        # newline="" keeps the "\n" terminators byte-identical across platforms
        with open(out / filename, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    manifest.artifacts = list(artifacts)
    return report


def write_manifest(manifest: RunManifest) -> Path:
    out = Path(manifest.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / MANIFEST_FILE
    path.write_text(manifest.model_dump_json(indent=2) + "\n", encoding="utf-8")
    return path


def run(manifest: RunManifest) -> int:
    """Execute a manifest and record its outcome.

    Returns 0 when every criterion passes, 2 on a degenerate, partial or warning
    verdict and 1 on a failed criterion or any error.
    """
    manifest.started = _now()
    status = 1
    try:
        report = execute(manifest)
        status = report.exit_status
        report_progress(logger, f"{manifest.experiment}: {report.overall.value}")
    except GroupLabError as e:
        logger.error("%s", e)
        manifest.error = f"{type(e).__name__}: {e}"
    except Exception as e:
        logger.exception("unexpected error")
        manifest.error = f"{type(e).__name__}: {e}"
    manifest.finished = _now()
    manifest.status = status
    if manifest.error is not None:
        manifest.artifacts = []
    manifest.artifacts.append(MANIFEST_FILE)
    write_manifest(manifest)
    return status
