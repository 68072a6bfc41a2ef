from __future__ import annotations


class CoherenceError(ValueError):
    """Base class for errors of the coherence checker."""


class AxiomArityError(CoherenceError):
    def __init__(self, axiom: str, expected: int, got: int):
        self.axiom = axiom
        self.expected = expected
        self.got = got
        super().__init__(f"Axiom ({axiom}) takes {expected} objects, got {got}")


class RegularityError(CoherenceError):
    pass


class NonStructuralMorphism(CoherenceError):
    pass
