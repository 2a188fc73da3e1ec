"""Shared exception types."""

from __future__ import annotations


class FormatError(ValueError):
    """Malformed text input; carries a 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class TooLargeError(ValueError):
    """Instance exceeds a configured size guard."""
