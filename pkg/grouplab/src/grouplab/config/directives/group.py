"""Group directive parser."""

import re
from typing import Optional

from grouplab.config.directives.base import DirectiveParser, literal
from grouplab.config.nodes import GroupDirective


class GroupDirectiveParser(DirectiveParser):
    """Parses !group directives."""

    name = "group"
    PATTERN = re.compile(r"^!group\s+(.+)$", re.DOTALL)

    def parse(self, line: str, line_num: int, col_num: int) -> Optional[GroupDirective]:
        """Parse !group { 'kind': ..., ... }."""
        match = self.PATTERN.match(line.strip())
        if not match:
            return None
        try:
            value = literal(match.group(1))
        except (SyntaxError, ValueError):
            return None
        if not isinstance(value, dict):
            return None
        return GroupDirective(name="group", spec=value, line=line_num, column=col_num)
