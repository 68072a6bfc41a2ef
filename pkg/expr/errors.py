from __future__ import annotations


class ExprError(ValueError):
    """Base class for malformed object or morphism expressions."""


class ExprSyntaxError(ExprError):
    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position} in {text!r}")


class MorphismTypeError(ExprError, TypeError):
    """A composite whose boundaries do not match after normalization."""

    def __init__(self, term: str, left: tuple, right: tuple):
        from expr.objects import format_normal_form

        self.term = term
        self.left = left
        self.right = right
        super().__init__(
            f"Ill-typed composite {term}: {format_normal_form(left)} does not match {format_normal_form(right)}"
        )
