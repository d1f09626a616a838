"""Validation for .lab config files."""

from pathlib import Path
from typing import List

from grouplab.config.loader import load_config
from grouplab.experiments import get_experiment


def validate_configs(config_dir: Path) -> List[str]:
    """Validate all .lab files below a directory."""
    errors = []

    if not config_dir.exists():
        return [f"Config directory not found: {config_dir}"]

    for lab_file in sorted(config_dir.rglob("*.lab")):
        try:
            cfg = load_config(lab_file)
            if cfg.experiment:
                get_experiment(cfg.experiment)
        except Exception as e:
            errors.append(f"{lab_file}: {str(e)}")

    return errors
