"""Node definitions for lab config documents."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Type, TypeVar


@dataclass
class ConfigNode:
    """Base for all config nodes."""

    line: int
    column: int


@dataclass
class Directive(ConfigNode):
    """Base for directives."""

    name: str


@dataclass
class GroupDirective(Directive):
    """!group { 'kind': 'free', 'rank': 2 }"""

    spec: Dict[str, Any]

    def __str__(self) -> str:
        return f"GroupDirective(spec={self.spec})"


@dataclass
class SubgroupDirective(Directive):
    """!subgroup H ['a', 'bab']"""

    label: str
    generators: List[str]

    def __str__(self) -> str:
        return f"SubgroupDirective({self.label}={self.generators})"


@dataclass
class ParamsDirective(Directive):
    """!params { 'r_max': 10, 'epsilon': 0 }"""

    params: Dict[str, Any]


@dataclass
class BudgetDirective(Directive):
    """!budget { 'ball_cap': 1000000 }"""

    budget: Dict[str, Any]


@dataclass
class SeedDirective(Directive):
    """!seed 7"""

    seed: int


@dataclass
class ExperimentDirective(Directive):
    """!experiment theorem_a"""

    experiment: str


D = TypeVar("D", bound=Directive)


@dataclass
class ParsedConfig:
    """A parsed config document: its directives in file order."""

    directives: List[Directive] = field(default_factory=list)
    file_path: str = ""

    def first(self, kind: Type[D]) -> Optional[D]:
        for directive in self.directives:
            if isinstance(directive, kind):
                return directive
        return None

    def all(self, kind: Type[D]) -> List[D]:
        return [d for d in self.directives if isinstance(d, kind)]
