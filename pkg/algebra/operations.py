"""
Identities, generators and the operations of the diagram category:
composition, sum, whiskering, reordering and tensor product.

Every operation takes and returns typed diagrams.  Operands must share a
signature, except that a diagram without seams adopts the signature of the
other operand.
"""
from __future__ import annotations

import dataclasses
import logging
from typing import List, Sequence

from algebra.errors import AlgebraError, BoundaryMismatch
from diagram.model import Seam, SeamNode, SheetDiagram, Slice, Swap
from diagram.validate import TypedDiagram, validate
from expr.objects import Word
from signature.gamma import (
    GammaGenerator,
    IdWord,
    canonical_generator,
    gamma_cod,
    gamma_dom,
    origins,
    tensor_generators,
)
from signature.model import EMPTY_SIGNATURE, NormalizedSignature

logger = logging.getLogger(__name__)

__all__ = [
    "identity",
    "generator",
    "generator_seam",
    "compose",
    "compose_all",
    "sum_diagrams",
    "sum_all",
    "whisker_left",
    "whisker_right",
    "permute",
    "reorder",
    "reorder_inverse",
    "invert_swaps",
    "tensor",
    "tensor_generators",
]


def _signature(t1: TypedDiagram, t2: TypedDiagram) -> NormalizedSignature:
    if t1.signature == t2.signature:
        return t1.signature
    if not any(t1.seams):
        return t2.signature
    if not any(t2.seams):
        return t1.signature
    raise AlgebraError("Diagrams are typed over different signatures")


def identity(nf: Sequence[Word], sig: NormalizedSignature = EMPTY_SIGNATURE) -> TypedDiagram:
    """The diagram with input sheets ``nf`` and no slices."""
    return validate(SheetDiagram(tuple(tuple(w) for w in nf), ()), sig)


def generator(g: GammaGenerator, sig: NormalizedSignature) -> TypedDiagram:
    """
    The single-seam diagram of a derived generator.

    Each morphism factor becomes a node, in order; identity factors become
    pass-through wires.  A generator made of identities only is the
    identity diagram on its domain.
    """
    g = canonical_generator(g)
    dom = gamma_dom(g, sig)
    if g.is_identity:
        return identity(dom, sig)
    return validate(SheetDiagram(dom, (generator_seam(g, sig),)), sig)


def generator_seam(g: GammaGenerator, sig: NormalizedSignature, offset: int = 0) -> Seam:
    """The seam carrying ``g``: one node per morphism factor, wires attached by origin."""
    dom = gamma_dom(g, sig)
    cod = gamma_cod(g, sig)
    dom_origins = origins(g, sig, "dom")
    cod_origins = origins(g, sig, "cod")
    nodes: List[SeamNode] = []
    through: Word = ()
    for i, factor in enumerate(g.factors):
        if isinstance(factor, IdWord):
            through += factor.word
            continue
        nodes.append(
            SeamNode(
                offset=len(through),
                in_wires=tuple(o.count(i) for o in dom_origins),
                out_wires=tuple(o.count(i) for o in cod_origins),
                label=factor.name,
            )
        )
    return Seam(offset, len(dom), len(cod), tuple(nodes), through if not dom else ())


def compose(t1: TypedDiagram, t2: TypedDiagram) -> TypedDiagram:
    """
    ``t2 ∘ t1``: stack ``t2`` on top of ``t1``.

    Raises:
        BoundaryMismatch: If the codomain of ``t1`` is not the domain of ``t2``
    """
    if t1.cod != t2.dom:
        raise BoundaryMismatch(t1.cod, t2.dom)
    return TypedDiagram(
        diagram=SheetDiagram(t1.diagram.input_sheets, t1.slices + t2.slices),
        signature=_signature(t1, t2),
        heights=t1.heights + t2.heights[1:],
        seams=t1.seams + t2.seams,
    )


def compose_all(first: TypedDiagram, *rest: TypedDiagram) -> TypedDiagram:
    """Compose bottom to top: ``compose_all(a, b, c) = c ∘ b ∘ a``."""
    result = first
    for t in rest:
        result = compose(result, t)
    return result


def _shift(piece: Slice, shift: int) -> Slice:
    return dataclasses.replace(piece, offset=piece.offset + shift)


def sum_diagrams(t1: TypedDiagram, t2: TypedDiagram) -> TypedDiagram:
    """Place ``t2`` to the right of ``t1``; ``t2``'s slices follow ``t1``'s."""
    shift = len(t1.cod)
    heights = [h + t2.dom for h in t1.heights] + [t1.cod + h for h in t2.heights[1:]]
    return TypedDiagram(
        diagram=SheetDiagram(
            t1.diagram.input_sheets + t2.diagram.input_sheets,
            t1.slices + tuple(_shift(piece, shift) for piece in t2.slices),
        ),
        signature=_signature(t1, t2),
        heights=tuple(heights),
        seams=t1.seams + t2.seams,
    )


def sum_all(parts: Sequence[TypedDiagram], sig: NormalizedSignature = EMPTY_SIGNATURE) -> TypedDiagram:
    result = identity((), sig)
    for part in parts:
        result = sum_diagrams(result, part)
    return result


def whisker_left(w: Word, t: TypedDiagram) -> TypedDiagram:
    """``w · t``: every sheet gains the wires ``w`` on its left, every seam as many pass-throughs."""
    w = tuple(w)
    if not w:
        return t
    slices: List[Slice] = []
    for piece in t.slices:
        if isinstance(piece, Seam):
            nodes = tuple(dataclasses.replace(n, offset=n.offset + len(w)) for n in piece.nodes)
            through = w + piece.through if piece.n_in == 0 else ()
            piece = dataclasses.replace(piece, nodes=nodes, through=through)
        slices.append(piece)
    sheets = tuple(w + s for s in t.diagram.input_sheets)
    return validate(SheetDiagram(sheets, tuple(slices)), t.signature)


def whisker_right(t: TypedDiagram, w: Word) -> TypedDiagram:
    """``t · w``: wires appended on the right; node offsets are unchanged."""
    w = tuple(w)
    if not w:
        return t
    slices: List[Slice] = []
    for piece in t.slices:
        if isinstance(piece, Seam) and piece.n_in == 0:
            piece = dataclasses.replace(piece, through=piece.through + w)
        slices.append(piece)
    sheets = tuple(s + w for s in t.diagram.input_sheets)
    return validate(SheetDiagram(sheets, tuple(slices)), t.signature)


def permute(
    words: Sequence[Word], order: Sequence[int], sig: NormalizedSignature = EMPTY_SIGNATURE
) -> TypedDiagram:
    """
    Swap-only diagram whose output sheet ``k`` is input sheet ``order[k]``.

    Transpositions are emitted in insertion order: output positions are
    filled left to right, each by moving its sheet leftwards one swap at a
    time.  The number of swaps is the inversion count of ``order``.
    """
    if sorted(order) != list(range(len(words))):
        raise AlgebraError(f"{list(order)} is not a permutation of {len(words)} sheets")
    current = list(range(len(words)))
    swaps: List[Slice] = []
    for target, wanted in enumerate(order):
        j = current.index(wanted)
        while j > target:
            swaps.append(Swap(j - 1))
            current[j - 1], current[j] = current[j], current[j - 1]
            j -= 1
    return validate(SheetDiagram(tuple(tuple(w) for w in words), tuple(swaps)), sig)


def reorder(
    p: int, q: int, grid: Sequence[Sequence[Word]], sig: NormalizedSignature = EMPTY_SIGNATURE
) -> TypedDiagram:
    """
    The reordering isomorphism ``⊕_i ⊕_j X_ij → ⊕_j ⊕_i X_ij`` on ``p × q``
    sheets: row-major input order to column-major output order.
    """
    if len(grid) != p or any(len(row) != q for row in grid):
        raise AlgebraError(f"reorder expects a {p} x {q} grid of words")
    words = [grid[i][j] for i in range(p) for j in range(q)]
    order = [i * q + j for j in range(q) for i in range(p)]
    return permute(words, order, sig)


def reorder_inverse(
    p: int, q: int, grid: Sequence[Sequence[Word]], sig: NormalizedSignature = EMPTY_SIGNATURE
) -> TypedDiagram:
    """Inverse of ``reorder(p, q, grid)``: ``reorder`` on the transposed grid."""
    transposed = [[grid[i][j] for i in range(p)] for j in range(q)]
    return reorder(q, p, transposed, sig)


def invert_swaps(t: TypedDiagram) -> TypedDiagram:
    """Inverse of a diagram made of swaps only: the same swaps read top to bottom."""
    if any(t.seams):
        raise AlgebraError("Only diagrams made of swaps can be inverted")
    return validate(SheetDiagram(t.cod, tuple(reversed(t.slices))), t.signature)


def tensor(t1: TypedDiagram, t2: TypedDiagram) -> TypedDiagram:
    """
    ``t1 ⊗ t2 = E_BD⁻¹ ∘ (⊕_l t1·D_l) ∘ E_AD ∘ (⊕_i A_i·t2)``

    for ``t1 : A → B`` and ``t2 : C → D``, with ``A_i`` and ``D_l`` the
    summands of ``A`` and ``D``.  The domain is the product normal form of
    the domains, and likewise for codomains.
    """
    sig = _signature(t1, t2)
    a, b, d = t1.dom, t1.cod, t2.cod
    left = sum_all([whisker_left(a_i, t2) for a_i in a], sig)
    e_ad = reorder(len(a), len(d), [[a_i + d_l for d_l in d] for a_i in a], sig)
    middle = sum_all([whisker_right(t1, d_l) for d_l in d], sig)
    e_bd_inv = reorder_inverse(len(b), len(d), [[b_k + d_l for d_l in d] for b_k in b], sig)
    result = compose_all(left, e_ad, middle, e_bd_inv)
    logger.debug("Tensor of %d and %d slices has %d slices", len(t1.slices), len(t2.slices), len(result.slices))
    return result
