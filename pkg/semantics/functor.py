"""
Operations on function tables mirroring the operations on diagrams:
composition, disjoint union and cartesian product.  Evaluation of a
composite diagram must agree with the corresponding table operation.
"""
from __future__ import annotations

from typing import Dict, Sequence

from expr.objects import NormalForm
from semantics.model import Element, EvalModel, Table, eval_object


def identity_table(nf: NormalForm, m: EvalModel) -> Dict[Element, Element]:
    return {e: e for e in eval_object(nf, m)}


def compose_tables(first: Table, second: Table) -> Dict[Element, Element]:
    """Apply ``first``, then ``second``."""
    return {e: second[out] for e, out in first.items()}


def sum_table(t1: Table, t2: Table, dom1_size: int, cod1_size: int) -> Dict[Element, Element]:
    """Disjoint union; the second table's summands move past the first's."""
    table = dict(t1)
    for e, out in t2.items():
        table[Element(e.summand + dom1_size, e.tokens)] = Element(out.summand + cod1_size, out.tokens)
    return table


def tensor_table(t1: Table, t2: Table, dom2_size: int, cod2_size: int) -> Dict[Element, Element]:
    """
    Cartesian product, read through the lexicographic summand order of the
    product normal form: summand ``(i, j)`` is ``i * size2 + j``.
    """
    table = {}
    for e1, out1 in t1.items():
        for e2, out2 in t2.items():
            source = Element(e1.summand * dom2_size + e2.summand, e1.tokens + e2.tokens)
            target = Element(out1.summand * cod2_size + out2.summand, out1.tokens + out2.tokens)
            table[source] = target
    return table


def permutation_table(nf: NormalForm, order: Sequence[int], m: EvalModel) -> Dict[Element, Element]:
    """Table of the sheet permutation sending input sheet ``order[k]`` to output ``k``."""
    position = {source: k for k, source in enumerate(order)}
    return {e: Element(position[e.summand], e.tokens) for e in eval_object(nf, m)}
