"""grouplab exceptions."""

from typing import Any, List, Optional, Sequence


class GroupLabError(Exception):
    """Base for every error raised by grouplab."""

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)

    def __str__(self) -> str:
        return self.message


class InvalidWordError(GroupLabError):
    """Raised when a word uses letters outside the alphabet."""

    def __init__(self, message: str, word: str = "", position: int = -1):
        self.word = word
        self.position = position
        super().__init__(message)

    def __str__(self) -> str:
        if self.word and self.position >= 0:
            return f"{self.message} (word {self.word!r}, position {self.position})"
        return self.message


class BudgetExceededError(GroupLabError):
    """Raised when a radius or memory budget would be exceeded."""

    def __init__(self, kind: str, limit: int, requested: int):
        self.kind = kind
        self.limit = limit
        self.requested = requested
        super().__init__(f"{kind} budget exceeded: requested {requested}, limit {limit}")


class UnsupportedOracleError(GroupLabError):
    """Raised when an operation needs a group the oracle does not model."""


class InconclusiveProjectionError(GroupLabError):
    """Raised when the projection minimum sits on the boundary of the capped window."""

    def __init__(self, message: str, window: int):
        self.window = window
        super().__init__(message)


class MalformedPathError(GroupLabError):
    """Raised when an admissible path decomposition is not a chain of geodesics."""

    def __init__(self, message: str, segment: int = -1):
        self.segment = segment
        super().__init__(message)

    def __str__(self) -> str:
        if self.segment >= 0:
            return f"segment {self.segment}: {self.message}"
        return self.message


class ExtensionExhaustedError(GroupLabError):
    """Raised when no candidate of an extension family yields an admissible path."""

    def __init__(self, message: str, reports: Sequence[Any]):
        self.reports: List[Any] = list(reports)
        super().__init__(message)


class PreconditionError(GroupLabError):
    """Raised when an experiment hypothesis does not hold."""

    def __init__(self, message: str, hypothesis: str = ""):
        self.hypothesis = hypothesis
        super().__init__(message)

    def __str__(self) -> str:
        if self.hypothesis:
            return f"{self.message} [{self.hypothesis}]"
        return self.message


class ConfigError(GroupLabError):
    """Raised when a config document is invalid."""

    def __init__(
        self,
        message: str,
        file_path: str = "",
        line: int = 0,
        field: Optional[str] = None,
    ):
        self.file_path = file_path
        self.line = line
        self.field = field
        super().__init__(message)

    def __str__(self) -> str:
        where = ""
        if self.file_path and self.line:
            where = f"{self.file_path}:{self.line}: "
        elif self.line:
            where = f"line {self.line}: "
        if self.field:
            return f"{where}{self.field}: {self.message}"
        return f"{where}{self.message}"
