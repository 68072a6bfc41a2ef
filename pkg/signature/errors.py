from __future__ import annotations


class SignatureError(ValueError):
    """Base class for malformed signatures and signature documents."""


class UnknownMorphism(SignatureError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"Unknown morphism generator {name!r}")
