"""Error types shared across the package.

Every failure mode carries a short machine-readable code (e.g. ``EDGE_DEGREE``,
``NOT_CONTRACTIBLE``) so callers and tests can dispatch on it without parsing
messages.
"""

from __future__ import annotations


class TriangulationError(ValueError):
    """A violated precondition or an invalid complex, tagged with a code."""

    def __init__(self, code: str, message: str = ""):
        self.code = code
        super().__init__(f"{code}: {message}" if message else code)


class InvalidTriangulation(TriangulationError):
    """A face set that does not describe a simple closed-surface triangulation."""


class SearchExhausted(TriangulationError):
    """A bounded cycle search ended without a witness or a certificate of absence."""

    def __init__(self, bound: int, message: str = ""):
        self.bound = bound
        super().__init__("SEARCH_EXHAUSTED", message or f"no witness up to length {bound}")
