"""Subgroup directive parser."""

import re
from typing import Optional

from grouplab.config.directives.base import DirectiveParser, literal
from grouplab.config.nodes import SubgroupDirective


class SubgroupDirectiveParser(DirectiveParser):
    """Parses !subgroup H ['a', 'b'] directives."""

    name = "subgroup"
    PATTERN = re.compile(r"^!subgroup\s+([A-Za-z_]\w*)\s+(.+)$", re.DOTALL)

    def parse(self, line: str, line_num: int, col_num: int) -> Optional[SubgroupDirective]:
        match = self.PATTERN.match(line.strip())
        if not match:
            return None
        try:
            value = literal(match.group(2))
        except (SyntaxError, ValueError):
            return None
        if isinstance(value, str):
            value = [value]
        if not isinstance(value, (list, tuple)) or not all(isinstance(w, str) for w in value):
            return None
        return SubgroupDirective(
            name="subgroup",
            label=match.group(1),
            generators=list(value),
            line=line_num,
            column=col_num,
        )
