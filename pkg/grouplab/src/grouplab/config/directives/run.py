"""Parsers for the single-value !seed and !experiment directives."""

import re
from typing import Optional

from grouplab.config.directives.base import DirectiveParser, literal
from grouplab.config.nodes import ExperimentDirective, SeedDirective


class SeedDirectiveParser(DirectiveParser):
    name = "seed"
    PATTERN = re.compile(r"^!seed\s+(-?\d+)\s*$")

    def parse(self, line: str, line_num: int, col_num: int) -> Optional[SeedDirective]:
        match = self.PATTERN.match(line.strip())
        if not match:
            return None
        return SeedDirective(name="seed", seed=int(match.group(1)), line=line_num, column=col_num)


class ExperimentDirectiveParser(DirectiveParser):
    """!experiment theorem_a (bare or quoted)."""

    name = "experiment"
    PATTERN = re.compile(r"^!experiment\s+(.+)$")

    def parse(self, line: str, line_num: int, col_num: int) -> Optional[ExperimentDirective]:
        match = self.PATTERN.match(line.strip())
        if not match:
            return None
        value = match.group(1).strip()
        if value[:1] in ("'", '"'):
            try:
                value = literal(value)
            except (SyntaxError, ValueError):
                return None
        if not isinstance(value, str) or not re.fullmatch(r"[A-Za-z_]\w*", value):
            return None
        return ExperimentDirective(
            name="experiment", experiment=value, line=line_num, column=col_num
        )
