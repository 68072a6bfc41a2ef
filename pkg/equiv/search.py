"""
Deciding equivalence of sheet diagrams.

The verdict is three-valued.  Random finite-set models refute; regular
isomorphism, maximal explosion and a bounded bidirectional search over
merge and explosion moves confirm; whatever is left is unknown.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, Hashable, List, Literal, Optional, Tuple, Union

from diagram.validate import TypedDiagram
from equiv.graph import diagram_key, skeleton_equal
from equiv.moves import Move, apply_move, enumerate_moves, explode_maximally, format_move
from equiv.errors import PatternMismatch
from expr.objects import format_normal_form
from semantics.errors import ModelError
from semantics.evaluate import eval_element
from semantics.model import Element, EvalModel, eval_object, random_model
from signature.model import NormalizedSignature

logger = logging.getLogger(__name__)

SEARCH_MOVES = ("explode", "merge")

Side = Literal["left", "right"]


@dataclass(frozen=True)
class TraceStep:
    side: Side
    move: Move


@dataclass(frozen=True)
class Witness:
    model: EvalModel
    element: Element
    left: Element
    right: Element


@dataclass(frozen=True)
class Equivalent:
    trace: Tuple[TraceStep, ...] = ()


@dataclass(frozen=True)
class Distinct:
    reason: str
    witness: Optional[Witness] = None


@dataclass(frozen=True)
class Unknown:
    explored: int


EquivVerdict = Union[Equivalent, Distinct, Unknown]


def model_signature(t1: TypedDiagram, t2: TypedDiagram) -> NormalizedSignature:
    """The diagrams' signature, with every object generator their sheets mention."""
    sig = t1.signature if t1.seams and any(t1.seams) else t2.signature
    objects = list(sig.objects)
    for t in (t1, t2):
        for types in t.heights:
            for word in types:
                objects.extend(x for x in word if x not in objects)
    return NormalizedSignature(objects=tuple(objects), morphisms=sig.morphisms)


def find_witness(t1: TypedDiagram, t2: TypedDiagram, m: EvalModel) -> Optional[Witness]:
    for e in eval_object(t1.dom, m):
        left, right = eval_element(t1, e, m), eval_element(t2, e, m)
        if left != right:
            return Witness(model=m, element=e, left=left, right=right)
    return None


def verify_witness(t1: TypedDiagram, t2: TypedDiagram, w: Witness) -> bool:
    return eval_element(t1, w.element, w.model) == w.left and eval_element(t2, w.element, w.model) == w.right != w.left


def _path(parents: Dict[Hashable, Tuple[Optional[Hashable], Optional[Move]]], key: Hashable) -> List[Move]:
    moves: List[Move] = []
    while True:
        parent, move = parents[key]
        if parent is None:
            break
        moves.append(move)
        key = parent
    return list(reversed(moves))


def bidirectional_search(
    t1: TypedDiagram, t2: TypedDiagram, budget: int
) -> Tuple[Optional[Tuple[TraceStep, ...]], int]:
    """
    Breadth-first search from both diagrams at once over merge and explosion
    moves, states identified by canonical key.  The smaller frontier is
    expanded a whole layer at a time.

    Returns:
        (trace, explored): the trace when the searches meet, else None
    """
    k1, k2 = diagram_key(t1), diagram_key(t2)
    parents = (
        {k1: (None, None)},
        {k2: (None, None)},
    )
    frontiers: Tuple[Deque, Deque] = (deque([(k1, t1)]), deque([(k2, t2)]))
    if k1 == k2:
        return (), 1
    explored = 2
    while frontiers[0] or frontiers[1]:
        # an exhausted side has its whole closure in parents; keep growing the other
        if not frontiers[0] or not frontiers[1]:
            side = 0 if frontiers[0] else 1
        else:
            side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        other = 1 - side
        layer = len(frontiers[side])
        logger.debug("Expanding %s frontier of %d states (%d explored)", ("left", "right")[side], layer, explored)
        for _ in range(layer):
            key, t = frontiers[side].popleft()
            for move in enumerate_moves(t, SEARCH_MOVES):
                try:
                    nxt = apply_move(t, move)
                except PatternMismatch:
                    continue
                nkey = diagram_key(nxt)
                if nkey in parents[side]:
                    continue
                parents[side][nkey] = (key, move)
                explored += 1
                if nkey in parents[other]:
                    mine = [TraceStep(("left", "right")[side], m) for m in _path(parents[side], nkey)]
                    theirs = [TraceStep(("left", "right")[other], m) for m in _path(parents[other], nkey)]
                    left, right = (mine, theirs) if side == 0 else (theirs, mine)
                    return tuple(left + right), explored
                if explored >= budget:
                    return None, explored
                frontiers[side].append((nkey, nxt))
    return None, explored


def decide_equiv(
    t1: TypedDiagram,
    t2: TypedDiagram,
    budget: int = 10_000,
    seed: int = 0,
    models: int = 5,
    max_carrier: int = 3,
) -> EquivVerdict:
    """
    Decide whether two typed diagrams denote the same morphism.

    Args:
        t1, t2: The diagrams, over the same signature
        budget: Number of canonical states the search may visit
        seed: Seed of the first random model; model ``i`` uses ``seed + i``
        models: Number of random models tried as refutation filter
        max_carrier: Largest carrier size of the random models

    Returns:
        ``Distinct`` with a witness when some model tells the diagrams apart,
        ``Equivalent`` with the moves that make them regularly isomorphic,
        ``Unknown`` when the budget runs out
    """
    if t1.dom != t2.dom or t1.cod != t2.cod:
        reason = (
            f"boundaries differ: {format_normal_form(t1.dom)} -> {format_normal_form(t1.cod)} vs "
            f"{format_normal_form(t2.dom)} -> {format_normal_form(t2.cod)}"
        )
        return Distinct(reason)

    sig = model_signature(t1, t2)
    for i in range(models):
        try:
            m = random_model(sig, seed + i, max_carrier)
        except ModelError as e:
            logger.warning("Skipping model filter: %s", e)
            break
        witness = find_witness(t1, t2, m)
        if witness is not None:
            logger.info("Distinct: model %d separates the diagrams at %s", i, witness.element)
            return Distinct("a finite-set model tells the diagrams apart", witness)

    if skeleton_equal(t1, t2):
        logger.info("Equivalent: regularly isomorphic")
        return Equivalent(())

    e1, moves1 = explode_maximally(t1)
    e2, moves2 = explode_maximally(t2)
    if skeleton_equal(e1, e2):
        logger.info("Equivalent after maximal explosion")
        return Equivalent(
            tuple(TraceStep("left", m) for m in moves1) + tuple(TraceStep("right", m) for m in moves2)
        )

    trace, explored = bidirectional_search(t1, t2, budget)
    if trace is not None:
        logger.info("Equivalent: search met after %d states", explored)
        return Equivalent(trace)
    logger.info("Unknown after %d states", explored)
    return Unknown(explored)


def replay(t1: TypedDiagram, t2: TypedDiagram, verdict: Equivalent) -> bool:
    """Apply the trace's moves to each side and check the results are regularly isomorphic."""
    for step in verdict.trace:
        if step.side == "left":
            t1 = apply_move(t1, step.move)
        else:
            t2 = apply_move(t2, step.move)
    return skeleton_equal(t1, t2)


def move_closure(t: TypedDiagram, limit: int = 10_000, kinds=SEARCH_MOVES) -> Dict[Hashable, TypedDiagram]:
    """
    Every diagram reachable from ``t`` by the given moves, one per canonical
    key, up to ``limit`` states.
    """
    start = diagram_key(t)
    seen: Dict[Hashable, TypedDiagram] = {start: t}
    queue = deque([t])
    while queue and len(seen) < limit:
        current = queue.popleft()
        for move in enumerate_moves(current, kinds):
            nxt = apply_move(current, move)
            key = diagram_key(nxt)
            if key not in seen:
                seen[key] = nxt
                queue.append(nxt)
    return seen


def format_verdict(verdict: EquivVerdict) -> str:
    if isinstance(verdict, Equivalent):
        lines = [f"equivalent ({len(verdict.trace)} moves)"]
        lines += [f"  {step.side}: {format_move(step.move)}" for step in verdict.trace]
        return "\n".join(lines)
    if isinstance(verdict, Distinct):
        lines = [f"distinct: {verdict.reason}"]
        if verdict.witness is not None:
            w = verdict.witness
            lines.append(f"  input {w.element}: left gives {w.left}, right gives {w.right}")
        return "\n".join(lines)
    return f"unknown: budget exhausted after {verdict.explored} states"
