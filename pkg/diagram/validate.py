"""
Typing of sheet diagrams against a normalized signature.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from diagram.errors import OffsetOutOfRange, PassThroughInconsistent, TypingViolation, UnknownMorphism, UnlabeledDiagram
from diagram.model import Seam, SheetDiagram, Swap, apply_swap, pass_through_count
from expr.objects import NormalForm, Word, format_normal_form, format_word
from signature.gamma import Factor, GammaGenerator, IdWord, MorName, gamma_cod, gamma_dom, origins, summand_choices
from signature.model import NormalizedSignature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeamTyping:
    """What validation reconstructs for one seam."""

    generator: GammaGenerator
    passes: int
    node_factors: Tuple[int, ...]  # factor index of each node
    dom: NormalForm
    cod: NormalForm
    dom_origins: Tuple[Tuple[int, ...], ...]
    cod_origins: Tuple[Tuple[int, ...], ...]
    dom_choices: Tuple[Tuple[int, ...], ...]
    cod_choices: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class TypedDiagram:
    diagram: SheetDiagram
    signature: NormalizedSignature
    heights: Tuple[NormalForm, ...]
    seams: Tuple[Optional[SeamTyping], ...]

    @property
    def slices(self):
        return self.diagram.slices

    @property
    def dom(self) -> NormalForm:
        return self.heights[0]

    @property
    def cod(self) -> NormalForm:
        return self.heights[-1]


def _groups(seam: Seam, passes: int) -> List[int]:
    """Sizes of the pass-through groups between consecutive nodes."""
    bounds = [0] + [node.offset for node in seam.nodes] + [passes]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def _split(word: Word, groups: List[int], counts: List[int]) -> Tuple[List[Word], List[Word]]:
    """Cut a sheet's word into pass-through groups and per-node wire runs."""
    passes: List[Word] = []
    runs: List[Word] = []
    pos = 0
    for k in range(len(counts)):
        passes.append(word[pos : pos + groups[k]])
        pos += groups[k]
        runs.append(word[pos : pos + counts[k]])
        pos += counts[k]
    passes.append(word[pos : pos + groups[-1]])
    return passes, runs


def reconstruct_generator(seam: Seam, pass_groups: List[Word]) -> Tuple[GammaGenerator, Tuple[int, ...]]:
    factors: List[Factor] = []
    node_factors: List[int] = []
    for k, node in enumerate(seam.nodes):
        if pass_groups[k]:
            factors.append(IdWord(pass_groups[k]))
        node_factors.append(len(factors))
        factors.append(MorName(node.label))
    if pass_groups[-1]:
        factors.append(IdWord(pass_groups[-1]))
    return GammaGenerator(tuple(factors)), tuple(node_factors)


def _check_labels(d: SheetDiagram) -> None:
    if not d.is_labeled:
        raise UnlabeledDiagram("Diagram has unlabeled wires or nodes; supply labels to validate it")


def _type_seam(
    seam: Seam, types: NormalForm, sig: NormalizedSignature, index: int
) -> SeamTyping:
    sizes = [len(w) for w in types]
    passes = pass_through_count(seam, sizes, index)
    groups = _groups(seam, passes)
    inputs = types[seam.offset : seam.offset + seam.n_in]

    if seam.n_in == 0:
        pass_groups, _ = _split(seam.through, groups, [0] * len(seam.nodes))
    else:
        pass_groups, _ = _split(inputs[0], groups, [n.in_wires[0] for n in seam.nodes])
        for s, word in enumerate(inputs[1:], start=1):
            others, _ = _split(word, groups, [n.in_wires[s] for n in seam.nodes])
            if others != pass_groups:
                raise PassThroughInconsistent(
                    f"Slice {index}: pass-through wires of input sheet {s} are "
                    f"{[format_word(w) for w in others]}, expected {[format_word(w) for w in pass_groups]}"
                )

    generator, node_factors = reconstruct_generator(seam, pass_groups)
    for node in seam.nodes:
        if node.label not in sig.morphisms:
            raise UnknownMorphism(node.label, index)

    dom = gamma_dom(generator, sig)
    cod = gamma_cod(generator, sig)
    dom_origins = origins(generator, sig, "dom")
    cod_origins = origins(generator, sig, "cod")

    if len(dom) != seam.n_in:
        raise TypingViolation(
            f"Slice {index}: generator {generator} has {len(dom)} domain summands, seam joins {seam.n_in} sheets"
        )
    if len(cod) != seam.n_out:
        raise TypingViolation(
            f"Slice {index}: generator {generator} has {len(cod)} codomain summands, seam produces {seam.n_out} sheets"
        )
    for s, word in enumerate(inputs):
        if word != dom[s]:
            raise TypingViolation(
                f"Slice {index}: input sheet {s} carries {format_word(word)}, "
                f"generator {generator} expects {format_word(dom[s])}"
            )
    for side, table, attr in (("input", dom_origins, "in_wires"), ("output", cod_origins, "out_wires")):
        for k, node in enumerate(seam.nodes):
            for s, origin in enumerate(table):
                expected = sum(1 for i in origin if i == node_factors[k])
                if getattr(node, attr)[s] != expected:
                    raise TypingViolation(
                        f"Slice {index}: node {k} ({node.label}) has {getattr(node, attr)[s]} wires on {side} "
                        f"sheet {s}, its summand there has {expected}"
                    )

    return SeamTyping(
        generator=generator,
        passes=passes,
        node_factors=node_factors,
        dom=dom,
        cod=cod,
        dom_origins=tuple(dom_origins),
        cod_origins=tuple(cod_origins),
        dom_choices=tuple(summand_choices(generator, sig, "dom")),
        cod_choices=tuple(summand_choices(generator, sig, "cod")),
    )


def validate(d: SheetDiagram, sig: NormalizedSignature) -> TypedDiagram:
    """
    Propagate sheet types bottom-up and check every seam against ``sig``.

    Args:
        d: The diagram, with all wires and nodes labeled
        sig: The signature naming the node labels

    Returns:
        The typed diagram: sheet types at every height and the generator
        reconstructed for every seam

    Raises:
        OffsetOutOfRange, ArityMismatch, PassThroughInconsistent,
        TypingViolation, UnknownMorphism, UnlabeledDiagram
    """
    _check_labels(d)
    types: NormalForm = d.input_sheets
    heights = [types]
    seams: List[Optional[SeamTyping]] = []
    for index, piece in enumerate(d.slices):
        if isinstance(piece, Swap):
            if piece.offset + 2 > len(types):
                raise OffsetOutOfRange(f"Slice {index}: swap at offset {piece.offset} on {len(types)} sheets")
            types = apply_swap(types, piece.offset)
            seams.append(None)
        else:
            typing = _type_seam(piece, types, sig, index)
            types = types[: piece.offset] + typing.cod + types[piece.offset + piece.n_in :]
            seams.append(typing)
            logger.debug("Slice %d: %s -> %s", index, typing.generator, format_normal_form(typing.cod))
        heights.append(types)
    return TypedDiagram(diagram=d, signature=sig, heights=tuple(heights), seams=tuple(seams))


def domain(t: TypedDiagram) -> NormalForm:
    return t.dom


def codomain(t: TypedDiagram) -> NormalForm:
    return t.cod


def seam_types(t: TypedDiagram) -> Dict[int, SeamTyping]:
    return {i: s for i, s in enumerate(t.seams) if s is not None}
