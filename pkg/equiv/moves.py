"""
Local moves on sheet diagrams.

* ``Exchange(index)`` swaps two consecutive slices acting on disjoint sheets.
* ``ExplodeAt(index, split)`` cuts the generator of a seam into
  ``g1 = factors[:split]`` and ``g2 = factors[split:]`` and replaces the
  seam by the staircase of ``g1 ⊗ g2``: one copy of ``g2`` per domain
  summand of ``g1``, reordering swaps, one copy of ``g1`` per codomain
  summand of ``g2``, reordering swaps.
* ``MergeAt(anchor, orientation, cut)`` recognizes such a staircase around
  the seam at slice ``anchor`` and collapses it into one seam carrying
  ``g1 ++ g2``.  In orientation ``g_first`` the anchor is the first copy of
  ``g2`` and ``cut`` is the length of its leading identity word; in
  ``f_first`` (copies of ``g1`` below copies of ``g2``) the anchor is the
  first copy of ``g1`` and ``cut`` is the length of its trailing identity
  word.

Every move preserves the interpretation of diagrams.
"""
from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass
from typing import Dict, List, Literal, Optional, Tuple, Union

import networkx as nx

from algebra.operations import generator, tensor
from diagram.model import Seam, SheetDiagram, Slice
from diagram.validate import TypedDiagram, validate
from equiv.errors import PatternMismatch
from equiv.graph import IN, OUT, OpenGraph, realize, to_open_graph
from expr.objects import Word
from signature.gamma import GammaGenerator, IdWord, canonical_generator, gamma_cod, gamma_dom

logger = logging.getLogger(__name__)

Orientation = Literal["g_first", "f_first"]


@dataclass(frozen=True)
class Exchange:
    index: int


@dataclass(frozen=True)
class ExplodeAt:
    index: int
    split: int


@dataclass(frozen=True)
class MergeAt:
    anchor: int
    orientation: Orientation
    cut: int


Move = Union[Exchange, ExplodeAt, MergeAt]


def format_move(move: Move) -> str:
    if isinstance(move, Exchange):
        return f"exchange slices {move.index} and {move.index + 1}"
    if isinstance(move, ExplodeAt):
        return f"explode slice {move.index} before factor {move.split}"
    return f"merge at slice {move.anchor} ({move.orientation}, cut {move.cut})"


# exchange


def _extent(piece: Slice) -> Tuple[int, int]:
    if isinstance(piece, Seam):
        return piece.n_in, piece.n_out
    return 2, 2


def exchangeable(t: TypedDiagram, index: int) -> bool:
    if not 0 <= index < len(t.slices) - 1:
        return False
    lower, upper = t.slices[index], t.slices[index + 1]
    _, lower_out = _extent(lower)
    upper_in, _ = _extent(upper)
    return upper.offset + upper_in <= lower.offset or upper.offset >= lower.offset + lower_out


def exchange(t: TypedDiagram, index: int) -> TypedDiagram:
    """
    Swap slices ``index`` and ``index + 1`` when they touch disjoint sheets.

    Raises:
        PatternMismatch: If the two slices share a sheet
    """
    if not exchangeable(t, index):
        raise PatternMismatch(Exchange(index), "slices are not independent")
    lower, upper = t.slices[index], t.slices[index + 1]
    lower_in, lower_out = _extent(lower)
    upper_in, upper_out = _extent(upper)
    if upper.offset + upper_in <= lower.offset:
        first = upper
        second = dataclasses.replace(lower, offset=lower.offset + upper_out - upper_in)
    else:
        first = dataclasses.replace(upper, offset=upper.offset - lower_out + lower_in)
        second = lower
    slices = t.slices[:index] + (first, second) + t.slices[index + 2 :]
    return validate(SheetDiagram(t.diagram.input_sheets, slices), t.signature)


# explode


def split_generator(g: GammaGenerator, split: int) -> Tuple[GammaGenerator, GammaGenerator]:
    return GammaGenerator(g.factors[:split]), GammaGenerator(g.factors[split:])


def explode_points(t: TypedDiagram, index: int) -> List[int]:
    """Split points at which the seam at ``index`` can be exploded."""
    typing = t.seams[index] if 0 <= index < len(t.seams) else None
    if typing is None:
        return []
    points = []
    for split in range(1, len(typing.generator.factors)):
        g1, g2 = split_generator(typing.generator, split)
        if g1.is_identity or g2.is_identity:
            continue
        if not gamma_dom(g1, t.signature) or not gamma_cod(g2, t.signature):
            continue
        points.append(split)
    return points


def explode(t: TypedDiagram, index: int, split: int) -> TypedDiagram:
    """
    Replace the seam at slice ``index`` by the staircase of its two halves.

    Raises:
        PatternMismatch: If the slice is not a seam, a half has no node, the
            first half has an empty domain or the second an empty codomain
    """
    location = ExplodeAt(index, split)
    if split not in explode_points(t, index):
        raise PatternMismatch(
            location, "no split with a node on both sides, a nonempty first domain and second codomain"
        )
    g1, g2 = split_generator(t.seams[index].generator, split)
    staircase = tensor(generator(g1, t.signature), generator(g2, t.signature))
    offset = t.slices[index].offset
    inner = tuple(dataclasses.replace(piece, offset=piece.offset + offset) for piece in staircase.slices)
    slices = t.slices[:index] + inner + t.slices[index + 1 :]
    logger.debug("Exploded slice %d into %d slices", index, len(inner))
    return validate(SheetDiagram(t.diagram.input_sheets, slices), t.signature)


# merge


@dataclass(frozen=True)
class _Match:
    g1: GammaGenerator
    g2: GammaGenerator
    lower: Tuple[int, ...]  # copies of the half applied first
    upper: Tuple[int, ...]  # copies of the half applied second
    inputs: Tuple[Tuple, ...]  # sources of the merged in-ports
    outputs: Tuple[Tuple, ...]  # targets of the merged out-ports


def _strip_prefix(g: GammaGenerator, length: int) -> Optional[Tuple[Word, GammaGenerator]]:
    if length == 0:
        return (), g
    if not g.factors or not isinstance(g.factors[0], IdWord) or len(g.factors[0].word) < length:
        return None
    word = g.factors[0].word
    rest = ((IdWord(word[length:]),) if len(word) > length else ()) + g.factors[1:]
    return word[:length], GammaGenerator(rest)


def _strip_suffix(g: GammaGenerator, length: int) -> Optional[Tuple[GammaGenerator, Word]]:
    if length == 0:
        return g, ()
    if not g.factors or not isinstance(g.factors[-1], IdWord) or len(g.factors[-1].word) < length:
        return None
    word = g.factors[-1].word
    rest = g.factors[:-1] + ((IdWord(word[:-length]),) if len(word) > length else ())
    return GammaGenerator(rest), word[-length:]


def _whiskered(left: Word, g: GammaGenerator, right: Word) -> GammaGenerator:
    factors = ((IdWord(left),) if left else ()) + g.factors + ((IdWord(right),) if right else ())
    return canonical_generator(GammaGenerator(factors))


def _is_node(v) -> bool:
    return v not in (IN, OUT)


def _cut_lengths(og: OpenGraph, anchor: int, orientation: Orientation) -> List[int]:
    g = og.generator(anchor)
    end = g.factors[0] if orientation == "g_first" else g.factors[-1]
    return list(range(len(end.word) + 1)) if isinstance(end, IdWord) else [0]


def _match(og: OpenGraph, anchor: int, orientation: Orientation, cut: int) -> _Match:
    """
    Find the staircase around ``anchor``.

    In ``g_first`` the copies ``X_i = 1_{A_i} g2`` (``A = dom g1``) feed the
    copies ``Y_l = g1 1_{D_l}`` (``D = cod g2``) by ``X_i.out[l] -> Y_l.in[i]``.
    In ``f_first`` the copies ``X_k = g1 1_{C_k}`` (``C = dom g2``) feed the
    copies ``Y_j = 1_{B_j} g2`` (``B = cod g1``) by ``X_k.out[j] -> Y_j.in[k]``.
    """
    location = MergeAt(anchor, orientation, cut)
    sig = og.signature
    if anchor not in og.graph or not _is_node(anchor):
        raise PatternMismatch(location, "anchor is not a seam")
    g = og.generator(anchor)

    if orientation == "g_first":
        stripped = _strip_prefix(g, cut)
        if stripped is None:
            raise PatternMismatch(location, "anchor has no leading identity of that length")
        head, g2 = stripped
        if g2.is_identity:
            raise PatternMismatch(location, "second half has no node")
        d = gamma_cod(g2, sig)
        targets = og.outputs(anchor)
        if not d or targets[0][1] != 0 or not _is_node(targets[0][0]):
            raise PatternMismatch(location, "anchor does not feed a seam on its first port")
        stripped2 = _strip_suffix(og.generator(targets[0][0]), len(d[0]))
        if stripped2 is None or stripped2[1] != d[0]:
            raise PatternMismatch(location, "upper seam does not end with the identity on the anchor's output")
        g1 = stripped2[0]
    else:
        stripped = _strip_suffix(g, cut)
        if stripped is None:
            raise PatternMismatch(location, "anchor has no trailing identity of that length")
        g1, tail = stripped
        if g1.is_identity:
            raise PatternMismatch(location, "first half has no node")
        b = gamma_cod(g1, sig)
        targets = og.outputs(anchor)
        if not b or targets[0][1] != 0 or not _is_node(targets[0][0]):
            raise PatternMismatch(location, "anchor does not feed a seam on its first port")
        stripped2 = _strip_prefix(og.generator(targets[0][0]), len(b[0]))
        if stripped2 is None or stripped2[0] != b[0]:
            raise PatternMismatch(location, "upper seam does not start with the identity on the anchor's output")
        g2 = stripped2[1]
        head = tail

    if g1.is_identity or g2.is_identity:
        raise PatternMismatch(location, "a half has no node")
    a, b = gamma_dom(g1, sig), gamma_cod(g1, sig)
    c, d = gamma_dom(g2, sig), gamma_cod(g2, sig)
    if orientation == "g_first":
        lower_words, upper_words = a, d
        expected_lower = [_whiskered(w, g2, ()) for w in a]
        expected_upper = [_whiskered((), g1, w) for w in d]
    else:
        lower_words, upper_words = c, b
        expected_lower = [_whiskered((), g1, w) for w in c]
        expected_upper = [_whiskered(w, g2, ()) for w in b]
    if not lower_words or not upper_words or lower_words[0] != head:
        raise PatternMismatch(location, "anchor is not the first copy of its half")

    first_upper = targets[0][0]
    sources = og.inputs(first_upper)
    if len(sources) != len(lower_words):
        raise PatternMismatch(location, "upper seam has the wrong number of inputs")
    lower = tuple(src for src, _ in sources)
    if any(not _is_node(v) for v in lower) or any(port != 0 for _, port in sources) or lower[0] != anchor:
        raise PatternMismatch(location, "inputs of the upper seam are not first outputs of lower seams")
    upper_ports = og.outputs(anchor)
    upper = tuple(v for v, _ in upper_ports)
    if len(upper) != len(upper_words) or any(not _is_node(v) for v in upper):
        raise PatternMismatch(location, "anchor does not feed seams only")
    if len(set(lower)) != len(lower) or len(set(upper)) != len(upper) or set(lower) & set(upper):
        raise PatternMismatch(location, "staircase seams are not distinct")
    for i, v in enumerate(lower):
        if canonical_generator(og.generator(v)) != expected_lower[i]:
            raise PatternMismatch(location, f"lower seam {v} carries {og.generator(v)}, expected {expected_lower[i]}")
        if og.outputs(v) != [(u, i) for u in upper]:
            raise PatternMismatch(location, f"lower seam {v} is not wired to the upper seams")
    for l, u in enumerate(upper):
        if canonical_generator(og.generator(u)) != expected_upper[l]:
            raise PatternMismatch(location, f"upper seam {u} carries {og.generator(u)}, expected {expected_upper[l]}")

    if orientation == "g_first":
        # merged in-port i*|C| + k is in-port k of lower copy i
        inputs = tuple(og.inputs(v)[k] for v in lower for k in range(len(c)))
        # merged out-port j*|D| + l is out-port j of upper copy l
        outputs = tuple(og.outputs(upper[l])[j] for j in range(len(b)) for l in range(len(d)))
    else:
        # merged in-port i*|C| + k is in-port i of lower copy k
        inputs = tuple(og.inputs(lower[k])[i] for i in range(len(a)) for k in range(len(c)))
        # merged out-port j*|D| + l is out-port l of upper copy j
        outputs = tuple(og.outputs(upper[j])[l] for j in range(len(b)) for l in range(len(d)))
    return _Match(g1=g1, g2=g2, lower=lower, upper=upper, inputs=inputs, outputs=outputs)


def _merged_graph(og: OpenGraph, m: _Match) -> OpenGraph:
    g = og.graph.copy()
    pattern = set(m.lower) | set(m.upper)
    merged = min(pattern)
    generator_ = canonical_generator(GammaGenerator(m.g1.factors + m.g2.factors))
    words: Dict[Tuple, Word] = {}
    for src, dst, data in og.graph.edges(data=True):
        words[("in", dst, data["dst_port"])] = data["word"]
        words[("out", src, data["src_port"])] = data["word"]
    for v in pattern:
        g.remove_node(v)
    g.add_node(
        merged,
        generator=generator_,
        dom=gamma_dom(generator_, og.signature),
        cod=gamma_cod(generator_, og.signature),
    )
    for port, (src, src_port) in enumerate(m.inputs):
        g.add_edge(src, merged, src_port=src_port, dst_port=port, word=words[("out", src, src_port)])
    for port, (dst, dst_port) in enumerate(m.outputs):
        g.add_edge(merged, dst, src_port=port, dst_port=dst_port, word=words[("in", dst, dst_port)])
    return OpenGraph(graph=g, dom=og.dom, cod=og.cod, signature=og.signature)


def merge(t: TypedDiagram, anchor: int, orientation: Orientation = "g_first", cut: int = 0) -> TypedDiagram:
    """
    Collapse the staircase around slice ``anchor`` into a single seam.

    Raises:
        PatternMismatch: If no staircase of the requested orientation and cut
            sits at ``anchor``, or merging would create a cycle
    """
    og = to_open_graph(t)
    m = _match(og, anchor, orientation, cut)
    merged = _merged_graph(og, m)
    if not nx.is_directed_acyclic_graph(merged.graph):
        raise PatternMismatch(MergeAt(anchor, orientation, cut), "merging would create a cycle")
    logger.debug("Merged %d seams at slice %d", len(m.lower) + len(m.upper), anchor)
    return realize(merged)


# enumeration


def enumerate_moves(t: TypedDiagram, kinds: Tuple[str, ...] = ("exchange", "explode", "merge")) -> List[Move]:
    """Every move applicable to ``t``, in slice order."""
    moves: List[Move] = []
    if "exchange" in kinds:
        moves.extend(Exchange(k) for k in range(len(t.slices) - 1) if exchangeable(t, k))
    if "explode" in kinds:
        for k, typing in enumerate(t.seams):
            if typing is not None:
                moves.extend(ExplodeAt(k, split) for split in explode_points(t, k))
    if "merge" in kinds:
        og = to_open_graph(t)
        for v in og.nodes:
            for orientation in ("g_first", "f_first"):
                for cut in _cut_lengths(og, v, orientation):
                    try:
                        m = _match(og, v, orientation, cut)
                    except PatternMismatch:
                        continue
                    if nx.is_directed_acyclic_graph(_merged_graph(og, m).graph):
                        moves.append(MergeAt(v, orientation, cut))
    return moves


def apply_move(t: TypedDiagram, move: Move) -> TypedDiagram:
    if isinstance(move, Exchange):
        return exchange(t, move.index)
    if isinstance(move, ExplodeAt):
        return explode(t, move.index, move.split)
    return merge(t, move.anchor, move.orientation, move.cut)


def explode_maximally(t: TypedDiagram) -> Tuple[TypedDiagram, List[Move]]:
    """Explode seams, lowest first and at their first split point, until none can be."""
    moves: List[Move] = []
    while True:
        for k in range(len(t.slices)):
            points = explode_points(t, k)
            if points:
                move = ExplodeAt(k, points[0])
                t = explode(t, k, points[0])
                moves.append(move)
                break
        else:
            return t, moves
