"""Runnable experiments and their registry."""

from dataclasses import dataclass
from typing import Callable, Dict

from grouplab.config.models import ExperimentConfig
from grouplab.exceptions import ConfigError
from grouplab.experiments.calibration import calibration_experiment
from grouplab.experiments.coset_growth import coset_growth_experiment
from grouplab.experiments.free_product import free_product_experiment
from grouplab.experiments.generic_image import generic_image_check, generic_predicate
from grouplab.experiments.genericity import genericity_experiment
from grouplab.experiments.growth import growth_experiment
from grouplab.experiments.injection import injection_experiment
from grouplab.experiments.report import Criterion, ExperimentReport, Status
from grouplab.experiments.theorem_a import theorem_a_experiment


@dataclass(frozen=True)
class Experiment:
    name: str
    description: str
    run: Callable[[ExperimentConfig], ExperimentReport]


EXPERIMENTS: Dict[str, Experiment] = {
    e.name: e
    for e in (
        Experiment(
            "growth",
            "ball and sphere sizes of the group with the fitted growth rate",
            growth_experiment,
        ),
        Experiment(
            "theorem_a",
            "double coset growth is a positive share of orbital growth",
            theorem_a_experiment,
        ),
        Experiment(
            "injection",
            "ball elements inject into double cosets up to fibers of size N0",
            injection_experiment,
        ),
        Experiment(
            "genericity",
            "barrier-free elements are exponentially rare",
            genericity_experiment,
        ),
        Experiment(
            "free_product",
            "alternating words in H and gKg^-1 are nontrivial",
            free_product_experiment,
        ),
        Experiment(
            "generic_image",
            "double cosets meeting a generic set are generic",
            generic_image_check,
        ),
        Experiment(
            "coset_growth",
            "left and right cosets grow at the rate of the group",
            coset_growth_experiment,
        ),
        Experiment(
            "calibration",
            "quasi-geodesic constant of generated admissible paths",
            calibration_experiment,
        ),
    )
}


def get_experiment(name: str) -> Experiment:
    try:
        return EXPERIMENTS[name]
    except KeyError:
        known = ", ".join(sorted(EXPERIMENTS))
        raise ConfigError(
            f"Unknown experiment {name!r} (known: {known})", field="experiment"
        ) from None


__all__ = [
    "EXPERIMENTS",
    "Criterion",
    "Experiment",
    "ExperimentReport",
    "Status",
    "calibration_experiment",
    "coset_growth_experiment",
    "free_product_experiment",
    "generic_image_check",
    "generic_predicate",
    "genericity_experiment",
    "growth_experiment",
    "get_experiment",
    "injection_experiment",
    "theorem_a_experiment",
]
