from __future__ import annotations

from typing import Optional

from signature.errors import UnknownMorphism as SignatureUnknownMorphism


class DiagramError(ValueError):
    """Base class for malformed or ill-typed sheet diagrams."""


class OffsetOutOfRange(DiagramError):
    pass


class ArityMismatch(DiagramError):
    pass


class PassThroughInconsistent(DiagramError):
    pass


class TypingViolation(DiagramError):
    pass


class UnlabeledDiagram(DiagramError):
    pass


class UnknownMorphism(DiagramError, SignatureUnknownMorphism):
    def __init__(self, name: str, slice_index: Optional[int] = None):
        SignatureUnknownMorphism.__init__(self, name)
        self.slice_index = slice_index
        if slice_index is not None:
            self.args = (f"Unknown morphism generator {name!r} on slice {slice_index}",)


class DiagramSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, column: int):
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")


class DiagramSchemaError(DiagramError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"Invalid field {field!r}: {message}")
