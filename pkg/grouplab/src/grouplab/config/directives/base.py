"""Base directive parser."""

import ast
import re
from abc import ABC, abstractmethod
from typing import Any, Optional

from grouplab.config.nodes import Directive


class DirectiveParser(ABC):
    """Base class for parsing directives - one subclass per directive name."""

    name: str = ""

    def can_parse(self, line: str) -> bool:
        """Check if the line starts with this directive."""
        return re.match(rf"^!{self.name}\b", line.strip()) is not None

    @abstractmethod
    def parse(self, line: str, line_num: int, col_num: int) -> Optional[Directive]:
        """Parse directive from line. Returns None if the value is incomplete or malformed."""
        pass


def literal(text: str) -> Any:
    """Evaluate a Python literal; raises ValueError/SyntaxError when it is not one."""
    return ast.literal_eval(text.strip())
