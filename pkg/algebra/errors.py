from __future__ import annotations

from expr.errors import MorphismTypeError
from expr.objects import NormalForm, format_normal_form

__all__ = ["AlgebraError", "BoundaryMismatch", "MorphismTypeError"]


class AlgebraError(ValueError):
    """Base class for diagram operations applied to unsuitable operands."""


class BoundaryMismatch(AlgebraError):
    def __init__(self, left: NormalForm, right: NormalForm):
        self.left = left
        self.right = right
        super().__init__(
            f"Cannot compose: codomain {format_normal_form(left)} does not match domain {format_normal_form(right)}"
        )
