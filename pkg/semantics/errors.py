from __future__ import annotations


class SemanticsError(ValueError):
    """Base class for finite-set interpretation failures."""


class ModelError(SemanticsError):
    """Missing carrier or table, partial table, or malformed model document."""


class EvaluationError(SemanticsError):
    """A seam's wiring disagrees with its typing; raised only on inconsistent input."""
