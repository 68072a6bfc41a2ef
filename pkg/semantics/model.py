"""
Finite-set models of a signature.

Every object generator is interpreted as a finite list of tokens, sums as
disjoint unions and products as cartesian products.  An element of a
normal form is therefore a summand index together with one token per wire
of that summand.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

import numpy as np

from expr.objects import NormalForm
from semantics.errors import ModelError
from signature.model import NormalizedSignature

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Element:
    summand: int
    tokens: Tuple[str, ...] = ()

    def __str__(self) -> str:
        return f"{self.summand}:({','.join(self.tokens)})"


Table = Mapping[Element, Element]


@dataclass(frozen=True)
class EvalModel:
    carriers: Mapping[str, Tuple[str, ...]] = field(default_factory=dict)
    tables: Mapping[str, Table] = field(default_factory=dict)

    def carrier(self, name: str) -> Tuple[str, ...]:
        try:
            return self.carriers[name]
        except KeyError as e:
            raise ModelError(f"Model has no carrier for object {name!r}") from e

    def table(self, name: str) -> Table:
        try:
            return self.tables[name]
        except KeyError as e:
            raise ModelError(f"Model has no table for morphism {name!r}") from e


def eval_object(nf: NormalForm, m: EvalModel) -> List[Element]:
    """
    Enumerate the elements of a normal form: summands in order, tuples in
    row-major token order.
    """
    elements = []
    for j, word in enumerate(nf):
        for tokens in itertools.product(*(m.carrier(x) for x in word)):
            elements.append(Element(j, tuple(tokens)))
    return elements


def check_element(nf: NormalForm, e: Element, m: EvalModel) -> None:
    """
    Raises:
        ModelError: If ``e`` is not an element of ``nf`` in ``m``
    """
    if not 0 <= e.summand < len(nf):
        raise ModelError(f"Element {e} names summand {e.summand}, the object has {len(nf)} summands")
    word = nf[e.summand]
    if len(e.tokens) != len(word):
        raise ModelError(f"Element {e} has {len(e.tokens)} tokens, summand {e.summand} has {len(word)} wires")
    for token, name in zip(e.tokens, word):
        if token not in m.carrier(name):
            raise ModelError(f"Token {token!r} of {e} is not in the carrier of {name}")


def check_model(m: EvalModel, sig: NormalizedSignature) -> None:
    """
    Raises:
        ModelError: If a carrier or table is missing, or a table is not a
            total function between the elements of its domain and codomain
    """
    for name in sig.objects:
        m.carrier(name)
    for name, (dom, cod) in sig.morphisms.items():
        table = m.table(name)
        dom_elements = eval_object(dom, m)
        cod_elements = set(eval_object(cod, m))
        if set(table) != set(dom_elements):
            raise ModelError(f"Table of {name!r} is not defined exactly on its domain")
        for e in dom_elements:
            if table[e] not in cod_elements:
                raise ModelError(f"Table of {name!r} maps {e} outside its codomain")


def random_model(
    sig: NormalizedSignature, seed: int = 0, max_carrier: int = 3, min_carrier: int = 1
) -> EvalModel:
    """
    Draw carriers of ``min_carrier..max_carrier`` tokens and uniformly random
    total tables, deterministically in ``seed``.

    Raises:
        ModelError: If ``max_carrier < 1`` or some morphism has no total
            table (a nonempty domain with an empty codomain)
    """
    if max_carrier < 1 or min_carrier < 0 or min_carrier > max_carrier:
        raise ModelError(f"Carrier sizes must satisfy 0 <= {min_carrier} <= {max_carrier} and max >= 1")
    rng = np.random.default_rng(seed)
    carriers: Dict[str, Tuple[str, ...]] = {}
    for name in sig.objects:
        size = int(rng.integers(min_carrier, max_carrier + 1))
        carriers[name] = tuple(f"{name}{k}" for k in range(size))
    model = EvalModel(carriers=carriers)
    tables: Dict[str, Dict[Element, Element]] = {}
    for name in sorted(sig.morphisms):
        dom, cod = sig.morphisms[name]
        dom_elements = eval_object(dom, model)
        cod_elements = eval_object(cod, model)
        if dom_elements and not cod_elements:
            raise ModelError(f"No total table for {name!r}: its codomain is empty in this model")
        picks = rng.integers(0, max(len(cod_elements), 1), size=len(dom_elements))
        tables[name] = {e: cod_elements[int(k)] for e, k in zip(dom_elements, picks)}
    logger.debug("Drew model with carrier sizes %s", {k: len(v) for k, v in carriers.items()})
    return EvalModel(carriers=carriers, tables=tables)
