"""
Diagrams of the structural isomorphisms.

Associators, unitors and the right distributor are identities; the
annihilators are the empty diagram; the additive symmetry and the left
distributor are permutations of summand sheets.
"""
from __future__ import annotations

from algebra.errors import AlgebraError
from algebra.operations import identity, permute
from diagram.validate import TypedDiagram
from expr.morphisms import (
    AssocAdd,
    AssocMul,
    DeltaL,
    DeltaR,
    LAnn,
    RAnn,
    Structural,
    Sym,
    UnitLAdd,
    UnitLMul,
    UnitRAdd,
    UnitRMul,
    structural_type,
)
from expr.objects import normalize
from signature.model import EMPTY_SIGNATURE, NormalizedSignature


def symmetry(a, b, sig: NormalizedSignature = EMPTY_SIGNATURE) -> TypedDiagram:
    x, y = normalize(a), normalize(b)
    order = [len(x) + k for k in range(len(y))] + list(range(len(x)))
    return permute(x + y, order, sig)


def left_distributor(a, b, c, sig: NormalizedSignature = EMPTY_SIGNATURE) -> TypedDiagram:
    """
    ``⊕_i (A_i B ⊕ A_i C) → ⊕_i A_i B ⊕ ⊕_i A_i C``: gather the ``B`` blocks
    of every summand of ``A`` before the ``C`` blocks.
    """
    na, nb, nc = normalize(a), normalize(b), normalize(c)
    width = len(nb) + len(nc)
    words = [x + y for x in na for y in nb + nc]
    order = [i * width + j for i in range(len(na)) for j in range(len(nb))]
    order += [i * width + len(nb) + k for i in range(len(na)) for k in range(len(nc))]
    return permute(words, order, sig)


def structural(m: Structural, sig: NormalizedSignature = EMPTY_SIGNATURE) -> TypedDiagram:
    """
    Diagram of a structural isomorphism.

    Raises:
        AlgebraError: If ``m`` is not a structural constructor
    """
    if isinstance(m, Sym):
        return symmetry(m.a, m.b, sig)
    if isinstance(m, DeltaL):
        return left_distributor(m.a, m.b, m.c, sig)
    if isinstance(m, (LAnn, RAnn)):
        return identity((), sig)
    if isinstance(m, (DeltaR, AssocMul, AssocAdd, UnitLMul, UnitRMul, UnitLAdd, UnitRAdd)):
        dom, _ = structural_type(m)
        return identity(normalize(dom), sig)
    raise AlgebraError(f"Not a structural isomorphism: {m!r}")
