"""
The combinatorial sheet-diagram encoding.

A diagram is a list of input sheets (each a word of wire labels) and a list
of slices read bottom to top.  A slice is either a seam, which joins
``n_in`` adjacent sheets into ``n_out`` new ones and carries the nodes of a
generator, or a swap of two adjacent sheets.

Wires that cross a seam without touching a node are pass-through wires.
They run on every input and every output sheet of the seam, so their count
is derived from the input sheets; only a seam without input sheets stores
them explicitly (``through``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple, Union

from diagram.errors import ArityMismatch, DiagramError, OffsetOutOfRange, PassThroughInconsistent
from expr.objects import NormalForm, Word

# Placeholder label of wires and nodes read from documents without labels.
UNLABELED = "_"


@dataclass(frozen=True)
class SeamNode:
    offset: int
    in_wires: Tuple[int, ...]
    out_wires: Tuple[int, ...]
    label: str = UNLABELED

    def __post_init__(self) -> None:
        if self.offset < 0:
            raise OffsetOutOfRange(f"Node offset must be nonnegative, got {self.offset}")
        if any(n < 0 for n in self.in_wires + self.out_wires):
            raise ArityMismatch(f"Node wire counts must be nonnegative: {self.in_wires} / {self.out_wires}")


@dataclass(frozen=True)
class Seam:
    offset: int
    n_in: int
    n_out: int
    nodes: Tuple[SeamNode, ...] = ()
    through: Word = ()

    def __post_init__(self) -> None:
        if self.offset < 0:
            raise OffsetOutOfRange(f"Seam offset must be nonnegative, got {self.offset}")
        if self.n_in < 0 or self.n_out < 0:
            raise ArityMismatch(f"Seam arities must be nonnegative, got {self.n_in} -> {self.n_out}")
        if not self.nodes and self.n_in == 1 and self.n_out == 1:
            raise DiagramError("A seam without nodes joining one sheet to one sheet is an identity")
        if self.through and self.n_in > 0:
            raise DiagramError("Only seams without input sheets store their pass-through wires")
        for node in self.nodes:
            if len(node.in_wires) != self.n_in or len(node.out_wires) != self.n_out:
                raise ArityMismatch(
                    f"Node wire lists {list(node.in_wires)} / {list(node.out_wires)} "
                    f"do not match seam arity {self.n_in} -> {self.n_out}"
                )
        offsets = [node.offset for node in self.nodes]
        if offsets != sorted(offsets):
            raise OffsetOutOfRange(f"Node offsets must be nondecreasing, got {offsets}")


@dataclass(frozen=True)
class Swap:
    offset: int

    def __post_init__(self) -> None:
        if self.offset < 0:
            raise OffsetOutOfRange(f"Swap offset must be nonnegative, got {self.offset}")


Slice = Union[Seam, Swap]


@dataclass(frozen=True)
class SheetDiagram:
    input_sheets: Tuple[Word, ...] = ()
    slices: Tuple[Slice, ...] = ()

    @property
    def is_labeled(self) -> bool:
        if any(UNLABELED in word for word in self.input_sheets):
            return False
        for piece in self.slices:
            if isinstance(piece, Seam):
                if UNLABELED in piece.through or any(n.label == UNLABELED for n in piece.nodes):
                    return False
        return True

    @property
    def node_count(self) -> int:
        return sum(len(s.nodes) for s in self.slices if isinstance(s, Seam))


def make_diagram(input_sheets, slices=()) -> SheetDiagram:
    """Build a diagram from plain lists."""
    return SheetDiagram(tuple(tuple(w) for w in input_sheets), tuple(slices))


def pass_through_count(seam: Seam, sizes: List[int], index: int = 0) -> int:
    """
    Number of pass-through wires of ``seam`` given the wire counts of the
    sheets at its height.

    Raises:
        OffsetOutOfRange: If the seam reaches past the last sheet
        ArityMismatch: If the nodes consume more wires than a sheet holds
        PassThroughInconsistent: If input sheets disagree on the count
    """
    if seam.offset + seam.n_in > len(sizes):
        raise OffsetOutOfRange(
            f"Slice {index}: seam at offset {seam.offset} consumes {seam.n_in} of {len(sizes)} sheets"
        )
    if seam.n_in == 0:
        passes = len(seam.through)
    else:
        counts = []
        for s in range(seam.n_in):
            used = sum(node.in_wires[s] for node in seam.nodes)
            left = sizes[seam.offset + s] - used
            if left < 0:
                raise ArityMismatch(
                    f"Slice {index}: nodes consume {used} wires from input sheet {s} holding {sizes[seam.offset + s]}"
                )
            counts.append(left)
        if len(set(counts)) > 1:
            raise PassThroughInconsistent(f"Slice {index}: pass-through counts differ across input sheets: {counts}")
        passes = counts[0]
    if seam.nodes and seam.nodes[-1].offset > passes:
        raise OffsetOutOfRange(
            f"Slice {index}: node offset {seam.nodes[-1].offset} exceeds the {passes} pass-through wires"
        )
    return passes


def sheet_sizes(d: SheetDiagram) -> List[List[int]]:
    """
    Wire count of every sheet at every height, from wire accounting alone.

    Works on unlabeled diagrams; raises the same structural errors as
    validation.
    """
    sizes = [len(w) for w in d.input_sheets]
    heights = [list(sizes)]
    for index, piece in enumerate(d.slices):
        if isinstance(piece, Swap):
            if piece.offset + 2 > len(sizes):
                raise OffsetOutOfRange(f"Slice {index}: swap at offset {piece.offset} on {len(sizes)} sheets")
            sizes[piece.offset], sizes[piece.offset + 1] = sizes[piece.offset + 1], sizes[piece.offset]
        else:
            passes = pass_through_count(piece, sizes, index)
            produced = [sum(n.out_wires[t] for n in piece.nodes) + passes for t in range(piece.n_out)]
            sizes[piece.offset : piece.offset + piece.n_in] = produced
        heights.append(list(sizes))
    return heights


def apply_swap(types: NormalForm, offset: int) -> NormalForm:
    items = list(types)
    items[offset], items[offset + 1] = items[offset + 1], items[offset]
    return tuple(items)
