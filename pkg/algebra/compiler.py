"""
Compilation of morphism expressions to sheet diagrams.
"""
from __future__ import annotations

from algebra.errors import BoundaryMismatch, MorphismTypeError
from algebra.operations import compose, generator, identity, invert_swaps, sum_diagrams, tensor
from algebra.structural import structural
from diagram.validate import TypedDiagram
from expr.errors import ExprError
from expr.morphisms import (
    STRUCTURAL_TYPES,
    Compose,
    Id,
    Inverse,
    MorExpr,
    MorGen,
    MProd,
    MSum,
    format_morexpr,
    is_structural,
)
from expr.objects import normalize
from signature.gamma import GammaGenerator, MorName
from signature.model import NormalizedSignature


def compile_morphism(m: MorExpr, sig: NormalizedSignature) -> TypedDiagram:
    """
    Build the sheet diagram of a morphism expression by structural recursion.

    Args:
        m: The expression
        sig: Signature typing its morphism generators

    Returns:
        A typed diagram whose domain and codomain are the normal forms of
        the expression's domain and codomain

    Raises:
        MorphismTypeError: If a composite's boundaries disagree
        UnknownMorphism: If a generator is not in ``sig``
    """
    if isinstance(m, MorGen):
        sig.type_of(m.name)
        return generator(GammaGenerator((MorName(m.name),)), sig)
    if isinstance(m, Id):
        return identity(normalize(m.obj), sig)
    if isinstance(m, Compose):
        inner = compile_morphism(m.inner, sig)
        outer = compile_morphism(m.outer, sig)
        try:
            return compose(inner, outer)
        except BoundaryMismatch as e:
            raise MorphismTypeError(format_morexpr(m), e.left, e.right) from e
    if isinstance(m, MSum):
        return sum_diagrams(compile_morphism(m.left, sig), compile_morphism(m.right, sig))
    if isinstance(m, MProd):
        return tensor(compile_morphism(m.left, sig), compile_morphism(m.right, sig))
    if isinstance(m, Inverse):
        if not is_structural(m.m):
            raise ExprError(f"Only structural isomorphisms can be inverted: {format_morexpr(m.m)}")
        return invert_swaps(compile_morphism(m.m, sig))
    if isinstance(m, STRUCTURAL_TYPES):
        return structural(m, sig)
    raise ExprError(f"Not a morphism expression: {m!r}")
