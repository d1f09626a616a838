"""Directive parsers for lab config documents."""

from grouplab.config.directives.base import DirectiveParser
from grouplab.config.directives.group import GroupDirectiveParser
from grouplab.config.directives.params import BudgetDirectiveParser, ParamsDirectiveParser
from grouplab.config.directives.run import ExperimentDirectiveParser, SeedDirectiveParser
from grouplab.config.directives.subgroup import SubgroupDirectiveParser

__all__ = [
    "BudgetDirectiveParser",
    "DirectiveParser",
    "ExperimentDirectiveParser",
    "GroupDirectiveParser",
    "ParamsDirectiveParser",
    "SeedDirectiveParser",
    "SubgroupDirectiveParser",
]
