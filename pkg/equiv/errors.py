from __future__ import annotations


class EquivError(ValueError):
    """Base class for errors of the equivalence checker."""


class PatternMismatch(EquivError):
    def __init__(self, location: object, reason: str):
        self.location = location
        self.reason = reason
        super().__init__(f"Move does not apply at {location}: {reason}")


class NonEmptySignature(EquivError):
    pass
