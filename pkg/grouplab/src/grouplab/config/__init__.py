"""Config documents: directive parsing and pydantic resolution."""

from grouplab.config.loader import load_config, parse_config, render_config
from grouplab.config.models import Budgets, ExperimentConfig, GroupSpec, Params
from grouplab.config.parser import LabConfigParser

__all__ = [
    "Budgets",
    "ExperimentConfig",
    "GroupSpec",
    "LabConfigParser",
    "Params",
    "load_config",
    "parse_config",
    "render_config",
]
