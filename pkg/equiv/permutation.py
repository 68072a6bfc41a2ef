"""
Permutations induced by swap-only diagrams.

Over the empty signature a diagram cannot contain seams, so it is a
sequence of sheet swaps and induces a permutation of its domain's
summands.  Two such diagrams are equivalent exactly when their
permutations agree.
"""
from __future__ import annotations

from typing import Tuple

import numpy as np

from diagram.model import Swap
from diagram.validate import TypedDiagram
from equiv.errors import EquivError, NonEmptySignature

Permutation = Tuple[int, ...]


def swap_permutation(t: TypedDiagram) -> Permutation:
    """
    The permutation of a diagram made of swaps only, as a tuple whose entry
    ``k`` is the input sheet that ends at output position ``k``.

    Raises:
        EquivError: If the diagram contains a seam
    """
    sheets = np.arange(len(t.dom))
    for piece in t.slices:
        if not isinstance(piece, Swap):
            raise EquivError("Diagram has seams; it does not induce a permutation")
        o = piece.offset
        sheets[[o, o + 1]] = sheets[[o + 1, o]]
    return tuple(int(k) for k in sheets)


def permutation_of(t: TypedDiagram) -> Permutation:
    """
    Raises:
        NonEmptySignature: If the diagram is typed over a signature with morphisms
    """
    if t.signature.morphisms:
        raise NonEmptySignature(
            "Permutations are only defined over the empty signature; "
            f"this one has {len(t.signature.morphisms)} morphisms"
        )
    return swap_permutation(t)


def compose_permutations(first: Permutation, second: Permutation) -> Permutation:
    """Permutation of ``first`` followed by ``second``."""
    return tuple(int(k) for k in np.asarray(first, dtype=int)[list(second)]) if first else ()


def invert_permutation(p: Permutation) -> Permutation:
    return tuple(int(k) for k in np.argsort(np.asarray(p, dtype=int))) if p else ()
