"""
Open graphs of skeletons, their canonical forms, and realization back to
sheet diagrams.

The open graph of a diagram has one vertex per seam plus the two boundary
vertices ``"in"`` and ``"out"``.  Every sheet segment becomes an edge from
the port that produces it to the port that consumes it; swaps leave no
trace besides the crossing of edges.  Two diagrams are regularly
isomorphic exactly when their open graphs are isomorphic as graphs with
ordered ports, which canonical keys decide.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

import networkx as nx

from algebra.operations import generator_seam
from diagram.model import SheetDiagram, Slice, Swap
from diagram.validate import TypedDiagram, validate
from expr.objects import NormalForm
from signature.gamma import GammaGenerator, MorName
from signature.model import NormalizedSignature

logger = logging.getLogger(__name__)

IN = "in"
OUT = "out"

Port = Tuple[Hashable, int]


@dataclass
class OpenGraph:
    graph: nx.MultiDiGraph
    dom: NormalForm
    cod: NormalForm
    signature: NormalizedSignature

    @property
    def nodes(self) -> List[Hashable]:
        return [v for v in self.graph.nodes if v not in (IN, OUT)]

    def generator(self, v: Hashable) -> GammaGenerator:
        return self.graph.nodes[v]["generator"]

    def inputs(self, v: Hashable) -> List[Port]:
        """Source port of every in-port of ``v``, by port index."""
        edges = sorted(self.graph.in_edges(v, data=True), key=lambda e: e[2]["dst_port"])
        return [(src, data["src_port"]) for src, _, data in edges]

    def outputs(self, v: Hashable) -> List[Port]:
        """Target port of every out-port of ``v``, by port index."""
        edges = sorted(self.graph.out_edges(v, data=True), key=lambda e: e[2]["src_port"])
        return [(dst, data["dst_port"]) for _, dst, data in edges]


def to_open_graph(t: TypedDiagram) -> OpenGraph:
    """
    Skeleton of ``t`` as an open graph; vertex ids are slice indices.
    """
    g = nx.MultiDiGraph()
    g.add_node(IN)
    g.add_node(OUT)
    producers: List[Port] = [(IN, k) for k in range(len(t.dom))]
    for index, (piece, typing, types) in enumerate(zip(t.slices, t.seams, t.heights)):
        if isinstance(piece, Swap):
            o = piece.offset
            producers[o], producers[o + 1] = producers[o + 1], producers[o]
            continue
        g.add_node(index, generator=typing.generator, dom=typing.dom, cod=typing.cod)
        for s in range(piece.n_in):
            src, src_port = producers[piece.offset + s]
            g.add_edge(src, index, src_port=src_port, dst_port=s, word=types[piece.offset + s])
        producers[piece.offset : piece.offset + piece.n_in] = [(index, k) for k in range(piece.n_out)]
    for k, (src, src_port) in enumerate(producers):
        g.add_edge(src, OUT, src_port=src_port, dst_port=k, word=t.cod[k])
    return OpenGraph(graph=g, dom=t.dom, cod=t.cod, signature=t.signature)


def generator_code(g: GammaGenerator) -> Tuple:
    return tuple((0, f.name) if isinstance(f, MorName) else (1, f.word) for f in g.factors)


def _neighbours(og: OpenGraph, v: Hashable) -> List[Hashable]:
    return [src for src, _ in og.inputs(v)] + [dst for dst, _ in og.outputs(v)]


def _traverse(og: OpenGraph, roots: Sequence[Hashable], numbering: Dict[Hashable, int]) -> None:
    """Breadth-first numbering: inputs of a vertex in port order, then its outputs."""
    queue = deque()
    for root in roots:
        if root not in numbering and root not in (IN, OUT):
            numbering[root] = len(numbering)
            queue.append(root)
    while queue:
        v = queue.popleft()
        for w in _neighbours(og, v):
            if w not in numbering and w not in (IN, OUT):
                numbering[w] = len(numbering)
                queue.append(w)


def _code(og: OpenGraph, numbering: Dict[Hashable, int]) -> Tuple:
    def ref(port: Port) -> Tuple[int, int]:
        v, k = port
        return (-1, k) if v == IN else (numbering[v], k)

    order = sorted(numbering, key=numbering.get)
    return tuple((generator_code(og.generator(v)), tuple(ref(p) for p in og.inputs(v))) for v in order)


def canonical_key(og: OpenGraph) -> Tuple:
    """
    A key equal for two open graphs exactly when they are isomorphic
    respecting boundary and port orders.

    Vertices reachable from the boundary are numbered by a breadth-first
    traversal from the boundary ports in order.  Each remaining component
    is coded from the root giving the least code, and the component codes
    are sorted.
    """
    numbering: Dict[Hashable, int] = {}
    boundary_roots = [dst for dst, _ in og.outputs(IN)] + [src for src, _ in og.inputs(OUT)]
    _traverse(og, boundary_roots, numbering)
    main = _code(og, numbering)
    outputs = tuple(((-1, k) if v == IN else (numbering[v], k)) for v, k in og.inputs(OUT))

    rest = og.graph.subgraph([v for v in og.nodes if v not in numbering])
    components = []
    for component in nx.weakly_connected_components(rest):
        best: Optional[Tuple] = None
        for root in sorted(component, key=str):
            local: Dict[Hashable, int] = {}
            _traverse(og, [root], local)
            code = _code(og, local)
            if best is None or code < best:
                best = code
        components.append(best)
    return (og.dom, og.cod, main, outputs, tuple(sorted(components)))


def diagram_key(t: TypedDiagram) -> Tuple:
    return canonical_key(to_open_graph(t))


def skeleton_equal(t1: TypedDiagram, t2: TypedDiagram) -> bool:
    """True when the two diagrams are regularly isomorphic."""
    if t1.dom != t2.dom or t1.cod != t2.cod:
        return False
    return diagram_key(t1) == diagram_key(t2)


def _bubble(producers: List[Port], j: int, target: int, slices: List[Slice]) -> None:
    while j > target:
        slices.append(Swap(j - 1))
        producers[j - 1], producers[j] = producers[j], producers[j - 1]
        j -= 1


def realize(og: OpenGraph, order_key: Optional[Callable[[Hashable], int]] = None) -> TypedDiagram:
    """
    A sheet diagram whose open graph is ``og``.

    Seams are placed in lexicographic topological order.  Before each seam
    its input sheets are gathered, by adjacent swaps, into a block starting
    at the leftmost of them; a seam without inputs goes to the far left.
    Output sheets are finally swapped into boundary order.
    """
    inner = og.graph.subgraph(og.nodes)
    producers: List[Port] = [(IN, k) for k in range(len(og.dom))]
    slices: List[Slice] = []
    for v in nx.lexicographical_topological_sort(inner, key=order_key):
        sources = og.inputs(v)
        g = og.generator(v)
        if sources:
            start = min(producers.index(p) for p in sources)
            for k, port in enumerate(sources):
                _bubble(producers, producers.index(port), start + k, slices)
        else:
            start = 0
        seam = generator_seam(g, og.signature, offset=start)
        slices.append(seam)
        producers[start : start + len(sources)] = [(v, k) for k in range(seam.n_out)]
    for k, port in enumerate(og.inputs(OUT)):
        _bubble(producers, producers.index(port), k, slices)
    return validate(SheetDiagram(og.dom, tuple(slices)), og.signature)


def canonical_diagram(t: TypedDiagram) -> TypedDiagram:
    """Realize ``t``'s open graph with seams ordered by canonical numbering."""
    og = to_open_graph(t)
    numbering: Dict[Hashable, int] = {}
    _traverse(og, [dst for dst, _ in og.outputs(IN)] + [src for src, _ in og.inputs(OUT)], numbering)
    for v in og.nodes:
        if v not in numbering:
            _traverse(og, [v], numbering)
    return realize(og, order_key=lambda v: numbering[v])
