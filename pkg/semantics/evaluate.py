"""
Interpretation of typed sheet diagrams in a finite-set model.
"""
from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from diagram.model import Seam, Slice, Swap
from diagram.validate import SeamTyping, TypedDiagram
from semantics.errors import EvaluationError, ModelError
from semantics.model import Element, EvalModel, check_element, eval_object
from signature.gamma import MorName


def _apply_seam(e: Element, seam: Seam, typing: SeamTyping, m: EvalModel) -> Element:
    s = e.summand - seam.offset
    origin = typing.dom_origins[s]
    if len(origin) != len(e.tokens):
        raise EvaluationError(f"Element {e} does not fit input sheet {s} of {typing.generator}")
    choice = typing.dom_choices[s]
    produced: List[Tuple[str, ...]] = []
    picks: List[int] = []
    for i, factor in enumerate(typing.generator.factors):
        tokens = tuple(tok for tok, o in zip(e.tokens, origin) if o == i)
        if isinstance(factor, MorName):
            table = m.table(factor.name)
            source = Element(choice[i], tokens)
            if source not in table:
                raise ModelError(f"Table of {factor.name!r} is undefined on {source}")
            target = table[source]
            picks.append(target.summand)
            produced.append(target.tokens)
        else:
            picks.append(0)
            produced.append(tokens)
    try:
        t = typing.cod_choices.index(tuple(picks))
    except ValueError as err:
        raise EvaluationError(f"Output choice {picks} of {typing.generator} is not a codomain summand") from err
    return Element(seam.offset + t, tuple(tok for run in produced for tok in run))


def apply_slice(e: Element, piece: Slice, typing: Optional[SeamTyping], m: EvalModel) -> Element:
    if isinstance(piece, Swap):
        if e.summand == piece.offset:
            return Element(piece.offset + 1, e.tokens)
        if e.summand == piece.offset + 1:
            return Element(piece.offset, e.tokens)
        return e
    if e.summand < piece.offset:
        return e
    if e.summand >= piece.offset + piece.n_in:
        return Element(e.summand + piece.n_out - piece.n_in, e.tokens)
    return _apply_seam(e, piece, typing, m)


def _push(t: TypedDiagram, e: Element, m: EvalModel) -> Element:
    for piece, typing in zip(t.slices, t.seams):
        e = apply_slice(e, piece, typing, m)
    return e


def eval_element(t: TypedDiagram, e: Element, m: EvalModel) -> Element:
    """
    Raises:
        ModelError: If ``e`` is not an element of the diagram's domain
    """
    check_element(t.dom, e, m)
    return _push(t, e, m)


def eval_diagram(t: TypedDiagram, m: EvalModel) -> Dict[Element, Element]:
    """
    The function a diagram denotes, as a table on the elements of its domain.

    Each element is pushed through the slices bottom to top: a swap
    re-indexes its summand, a seam hands each node the tokens of the wires
    it owns, looks the node up in the model, and reassembles the outgoing
    tokens with the pass-through tokens in place.
    """
    return {e: _push(t, e, m) for e in eval_object(t.dom, m)}
