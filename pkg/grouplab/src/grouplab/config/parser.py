"""Lab config document parser."""

from pathlib import Path
from typing import List

from grouplab.config.directives import (
    BudgetDirectiveParser,
    DirectiveParser,
    ExperimentDirectiveParser,
    GroupDirectiveParser,
    ParamsDirectiveParser,
    SeedDirectiveParser,
    SubgroupDirectiveParser,
)
from grouplab.config.nodes import Directive, ParsedConfig, SubgroupDirective
from grouplab.exceptions import ConfigError

SINGLETONS = ("group", "params", "budget", "seed", "experiment")


class LabConfigParser:
    """Turns a .lab document into directives, one per `!` line (or bracketed block)."""

    def __init__(self) -> None:
        self.directive_parsers: List[DirectiveParser] = [
            GroupDirectiveParser(),
            SubgroupDirectiveParser(),
            ParamsDirectiveParser(),
            BudgetDirectiveParser(),
            SeedDirectiveParser(),
            ExperimentDirectiveParser(),
        ]

    def parse_file(self, file_path: Path) -> ParsedConfig:
        with open(file_path, "r", encoding="utf-8") as f:
            content = f.read()
        return self.parse(content, str(file_path))

    def parse(self, content: str, file_path: str = "") -> ParsedConfig:
        lines = content.split("\n")
        parsed = ParsedConfig(file_path=file_path)

        i = 0
        while i < len(lines):
            stripped = lines[i].strip()
            line_num = i + 1
            if not stripped or stripped.startswith("#"):
                i += 1
                continue
            if not stripped.startswith("!"):
                raise ConfigError(
                    f"Expected a directive, found {stripped[:40]!r}",
                    file_path=file_path,
                    line=line_num,
                )

            parser = next((p for p in self.directive_parsers if p.can_parse(stripped)), None)
            if parser is None:
                word = stripped.split()[0]
                raise ConfigError(f"Unknown directive {word}", file_path=file_path, line=line_num)

            directive = parser.parse(stripped, line_num, 0)
            j = i + 1
            if directive is None:
                # Accumulate until brackets balance
                accumulated = stripped
                brace_count = accumulated.count("{") - accumulated.count("}")
                bracket_count = accumulated.count("[") - accumulated.count("]")
                paren_count = accumulated.count("(") - accumulated.count(")")
                while (brace_count > 0 or bracket_count > 0 or paren_count > 0) and j < len(lines):
                    next_line = lines[j].strip()
                    accumulated += "\n" + next_line
                    brace_count += next_line.count("{") - next_line.count("}")
                    bracket_count += next_line.count("[") - next_line.count("]")
                    paren_count += next_line.count("(") - next_line.count(")")
                    j += 1
                directive = parser.parse(accumulated, line_num, 0)
            if directive is None:
                raise ConfigError(
                    f"Malformed !{parser.name} directive", file_path=file_path, line=line_num
                )

            self._check_duplicate(parsed, directive, file_path)
            parsed.directives.append(directive)
            i = j
        return parsed

    def _check_duplicate(self, parsed: ParsedConfig, directive: Directive, file_path: str) -> None:
        for other in parsed.directives:
            if other.name != directive.name:
                continue
            if directive.name in SINGLETONS or (
                isinstance(directive, SubgroupDirective)
                and isinstance(other, SubgroupDirective)
                and other.label == directive.label
            ):
                raise ConfigError(
                    f"Duplicate !{directive.name} directive (first on line {other.line})",
                    file_path=file_path,
                    line=directive.line,
                )
