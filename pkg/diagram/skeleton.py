"""
Skeletons: the symmetric monoidal string diagram over the derived signature
left after forgetting the wires and nodes of a sheet diagram.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple, Union

from diagram.errors import DiagramError
from diagram.validate import TypedDiagram
from expr.objects import NormalForm, Word, format_normal_form, format_word
from signature.gamma import GammaGenerator


@dataclass(frozen=True)
class SkeletonNode:
    offset: int
    generator: GammaGenerator
    dom: NormalForm
    cod: NormalForm


@dataclass(frozen=True)
class SkeletonSwap:
    offset: int
    left: Word
    right: Word


SkeletonSlice = Union[SkeletonNode, SkeletonSwap]


@dataclass(frozen=True)
class SkeletonDiagram:
    dom: NormalForm
    slices: Tuple[SkeletonSlice, ...] = ()

    @property
    def cod(self) -> NormalForm:
        types = self.dom
        for piece in self.slices:
            if isinstance(piece, SkeletonSwap):
                o = piece.offset
                types = types[:o] + (types[o + 1], types[o]) + types[o + 2 :]
            else:
                types = types[: piece.offset] + piece.cod + types[piece.offset + len(piece.dom) :]
        return types


def skeleton(t: TypedDiagram) -> SkeletonDiagram:
    """Replace every seam by one node labeled with its generator; swaps become symmetries."""
    slices = []
    for piece, typing, types in zip(t.diagram.slices, t.seams, t.heights):
        if typing is None:
            o = piece.offset
            slices.append(SkeletonSwap(o, types[o], types[o + 1]))
        else:
            slices.append(SkeletonNode(piece.offset, typing.generator, typing.dom, typing.cod))
    return SkeletonDiagram(t.dom, tuple(slices))


def compose_skeletons(s1: SkeletonDiagram, s2: SkeletonDiagram) -> SkeletonDiagram:
    """``s2 ∘ s1``: stack ``s2`` on top of ``s1``."""
    if s1.cod != s2.dom:
        raise DiagramError("Cannot compose skeletons with mismatched boundaries")
    return SkeletonDiagram(s1.dom, s1.slices + s2.slices)


def sum_skeletons(s1: SkeletonDiagram, s2: SkeletonDiagram) -> SkeletonDiagram:
    shift = len(s1.cod)
    shifted = []
    for piece in s2.slices:
        if isinstance(piece, SkeletonSwap):
            shifted.append(SkeletonSwap(piece.offset + shift, piece.left, piece.right))
        else:
            shifted.append(SkeletonNode(piece.offset + shift, piece.generator, piece.dom, piece.cod))
    return SkeletonDiagram(s1.dom + s2.dom, s1.slices + tuple(shifted))


def format_skeleton(s: SkeletonDiagram) -> str:
    lines = [f"dom: {format_normal_form(s.dom)}"]
    for i, piece in enumerate(s.slices):
        if isinstance(piece, SkeletonSwap):
            lines.append(f"{i}: swap @{piece.offset} {format_word(piece.left)} <-> {format_word(piece.right)}")
        else:
            lines.append(
                f"{i}: {piece.generator} @{piece.offset} : "
                f"{format_normal_form(piece.dom)} -> {format_normal_form(piece.cod)}"
            )
    lines.append(f"cod: {format_normal_form(s.cod)}")
    return "\n".join(lines)
