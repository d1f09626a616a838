"""From config text to a resolved ExperimentConfig, and back."""

import logging
import math
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from grouplab.config.models import ExperimentConfig
from grouplab.config.nodes import (
    BudgetDirective,
    ExperimentDirective,
    GroupDirective,
    ParamsDirective,
    ParsedConfig,
    SeedDirective,
    SubgroupDirective,
)
from grouplab.config.parser import LabConfigParser
from grouplab.config.validation import validate_with_model
from grouplab.core.alphabet import Word
from grouplab.core.oracles import GroupOracle
from grouplab.exceptions import ConfigError, InvalidWordError

logger = logging.getLogger(__name__)

WORD_PARAMS = ("g_H", "g_K", "g", "f")


def _document_data(parsed: ParsedConfig) -> Dict[str, Any]:
    data: Dict[str, Any] = {}
    group = parsed.first(GroupDirective)
    if group is not None:
        data["group"] = group.spec
    for sub in parsed.all(SubgroupDirective):
        if sub.label not in ("H", "K"):
            raise ConfigError(
                f"Unknown subgroup label {sub.label!r} (expected H or K)",
                file_path=parsed.file_path,
                line=sub.line,
                field=sub.label,
            )
        data[sub.label] = sub.generators
    params = parsed.first(ParamsDirective)
    if params is not None:
        data["params"] = dict(params.params)
    budget = parsed.first(BudgetDirective)
    if budget is not None:
        data["budget"] = dict(budget.budget)
    seed = parsed.first(SeedDirective)
    if seed is not None:
        data["seed"] = seed.seed
    experiment = parsed.first(ExperimentDirective)
    if experiment is not None:
        data["experiment"] = experiment.experiment
    return data


def _line_of(parsed: ParsedConfig, field: str) -> int:
    """Line of the directive that supplied a dotted field name."""
    root = field.split(".")[0]
    for directive in parsed.directives:
        if isinstance(directive, SubgroupDirective):
            if directive.label == root:
                return directive.line
        elif directive.name == root:
            return directive.line
    return 0


def _check_words(cfg: ExperimentConfig, parsed: ParsedConfig) -> None:
    try:
        oracle = cfg.oracle
    except (InvalidWordError, ValueError) as e:
        raise ConfigError(str(e), parsed.file_path, _line_of(parsed, "group"), "group") from e

    fields: List[Tuple[str, Optional[str]]] = []
    fields.extend((f"H.{i}", w) for i, w in enumerate(cfg.H))
    fields.extend((f"K.{i}", w) for i, w in enumerate(cfg.K or []))
    fields.extend((f"params.{name}", getattr(cfg.params, name)) for name in WORD_PARAMS)
    fields.extend((f"params.F.{i}", w) for i, w in enumerate(cfg.params.F))
    for name, text in fields:
        if text is None:
            continue
        try:
            oracle.alphabet.parse(text)
        except InvalidWordError as e:
            raise ConfigError(str(e), parsed.file_path, _line_of(parsed, name), name) from e


def default_power(oracle: GroupOracle, g: Word, lambda_cal: float) -> int:
    """Smallest M >= 1 with |g^M| > lambda_cal."""
    if not oracle.normal_form(g):
        return 1
    M = 1
    while len(oracle.power(g, M)) <= lambda_cal:
        M += 1
    return M


def resolve_defaults(cfg: ExperimentConfig) -> ExperimentConfig:
    """Fill r_min, M and r0 from the other parameters."""
    p = cfg.params
    updates: Dict[str, Any] = {}
    if p.r_min is None:
        updates["r_min"] = math.ceil(p.r_max / 2)
        if updates["r_min"] >= p.r_max:
            updates["r_min"] = p.r_max - 1
    g_H = cfg.word(p.g_H)
    M = p.M
    if M is None:
        M = default_power(cfg.oracle, g_H, p.lambda_cal)
        updates["M"] = M
    if p.r0 is None:
        F = cfg.F_words
        if p.g_H is not None and F:
            updates["r0"] = 2 * M * len(cfg.oracle.normal_form(g_H)) + 2 * max(len(f) for f in F)
        else:
            updates["r0"] = 0
    if updates:
        logger.debug("resolved defaults: %s", updates)
        resolved = cfg.model_copy(update={"params": p.model_copy(update=updates)})
        resolved._oracle = cfg._oracle
        return resolved
    return cfg


def apply_overrides(data: Dict[str, Any], overrides: Dict[str, Any]) -> None:
    """Set dotted keys such as ``params.r_max`` in raw document data."""
    for dotted, value in overrides.items():
        *parents, leaf = dotted.split(".")
        target = data
        for key in parents:
            target = target.setdefault(key, {})
        target[leaf] = value


def parse_config(
    text: str, file_path: str = "", overrides: Optional[Dict[str, Any]] = None
) -> ExperimentConfig:
    """Parse, validate and resolve a config document.

    ``overrides`` are applied before validation, so an overridden r_max still
    gets its r_min default and window check.
    """
    parsed = LabConfigParser().parse(text, file_path)
    data = _document_data(parsed)
    if overrides:
        apply_overrides(data, overrides)
    cfg, errors = validate_with_model(data, ExperimentConfig)
    if cfg is None:
        field, message = next(iter(errors.items()))
        raise ConfigError(message, file_path, _line_of(parsed, field), field)
    _check_words(cfg, parsed)
    return resolve_defaults(cfg)


def load_config(path: Path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as f:
        return parse_config(f.read(), str(path))


def render_config(cfg: ExperimentConfig, experiment: Optional[str] = None) -> str:
    """The resolved config as directive lines; parse_config reads it back."""
    lines = [
        f"!group {cfg.group.model_dump(exclude_defaults=True)!r}",
        f"!subgroup H {cfg.H!r}",
        f"!subgroup K {cfg.K!r}",
        f"!params {cfg.params.model_dump()!r}",
        f"!budget {cfg.budget.model_dump()!r}",
        f"!seed {cfg.seed}",
    ]
    name = experiment or cfg.experiment
    if name:
        lines.append(f"!experiment {name}")
    return "\n".join(lines) + "\n"
