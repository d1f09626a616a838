"""Parsers for the dictionary-valued !params and !budget directives."""

import re
from typing import Any, Dict, Optional

from grouplab.config.directives.base import DirectiveParser, literal
from grouplab.config.nodes import BudgetDirective, Directive, ParamsDirective


class DictDirectiveParser(DirectiveParser):
    """Parses !<name> { ... } into a dictionary."""

    def _parse_dict(self, line: str) -> Optional[Dict[str, Any]]:
        match = re.match(rf"^!{self.name}\s+(.+)$", line.strip(), re.DOTALL)
        if not match:
            return None
        try:
            value = literal(match.group(1))
        except (SyntaxError, ValueError):
            return None
        if not isinstance(value, dict) or not all(isinstance(k, str) for k in value):
            return None
        return value

    def parse(self, line: str, line_num: int, col_num: int) -> Optional[Directive]:
        value = self._parse_dict(line)
        if value is None:
            return None
        return self.build(value, line_num, col_num)

    def build(self, value: Dict[str, Any], line_num: int, col_num: int) -> Directive:
        raise NotImplementedError


class ParamsDirectiveParser(DictDirectiveParser):
    name = "params"

    def build(self, value: Dict[str, Any], line_num: int, col_num: int) -> ParamsDirective:
        return ParamsDirective(name="params", params=value, line=line_num, column=col_num)


class BudgetDirectiveParser(DictDirectiveParser):
    name = "budget"

    def build(self, value: Dict[str, Any], line_num: int, col_num: int) -> BudgetDirective:
        return BudgetDirective(name="budget", budget=value, line=line_num, column=col_num)
