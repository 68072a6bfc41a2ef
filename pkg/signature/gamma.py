"""
The derived monoidal signature: lists of morphism generators and identity
words, typed by the normal form of the product of their factor types.

Every wire of a summand of ``gamma_dom(g)`` comes from exactly one factor
of ``g``; the factor index of each wire position is its origin.  Origins
are computed by carrying provenance through the product instead of by
matching labels, so repeated generators stay unambiguous.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import List, Literal, Sequence, Tuple, Union

from expr.objects import NormalForm, Word, format_word
from signature.errors import SignatureError
from signature.model import NormalizedSignature

Side = Literal["dom", "cod"]


@dataclass(frozen=True)
class MorName:
    name: str


@dataclass(frozen=True)
class IdWord:
    word: Word

    def __post_init__(self) -> None:
        if not self.word:
            raise SignatureError("Identity factors must carry a nonempty word")


Factor = Union[MorName, IdWord]


@dataclass(frozen=True)
class GammaGenerator:
    factors: Tuple[Factor, ...] = ()

    @property
    def nodes(self) -> Tuple[int, ...]:
        """Factor indices of the morphism generators, in order."""
        return tuple(i for i, f in enumerate(self.factors) if isinstance(f, MorName))

    @property
    def is_identity(self) -> bool:
        return not self.nodes

    def __str__(self) -> str:
        return format_generator(self)


def format_generator(g: GammaGenerator) -> str:
    parts = [f.name if isinstance(f, MorName) else f"1_{format_word(f.word)}" for f in g.factors]
    return "[" + ", ".join(parts) + "]"


def canonical_generator(g: GammaGenerator) -> GammaGenerator:
    """Merge adjacent identity factors into one identity on the concatenated word."""
    merged: List[Factor] = []
    for factor in g.factors:
        if isinstance(factor, IdWord) and merged and isinstance(merged[-1], IdWord):
            merged[-1] = IdWord(merged[-1].word + factor.word)
        else:
            merged.append(factor)
    return GammaGenerator(tuple(merged))


def tensor_generators(g1: GammaGenerator, g2: GammaGenerator) -> GammaGenerator:
    return GammaGenerator(g1.factors + g2.factors)


def factor_type(factor: Factor, sig: NormalizedSignature, side: Side) -> NormalForm:
    if isinstance(factor, IdWord):
        return (factor.word,)
    typ = sig.type_of(factor.name)
    return typ.dom if side == "dom" else typ.cod


def summand_choices(g: GammaGenerator, sig: NormalizedSignature, side: Side) -> List[Tuple[int, ...]]:
    """
    For every summand of the generator's domain (or codomain), the index of
    the summand picked from each factor, in left-major lexicographic order.
    """
    sizes = [range(len(factor_type(f, sig, side))) for f in g.factors]
    return list(itertools.product(*sizes))


def _side(g: GammaGenerator, sig: NormalizedSignature, side: Side) -> List[Tuple[Word, Tuple[int, ...]]]:
    types = [factor_type(f, sig, side) for f in g.factors]
    summands = []
    for choice in summand_choices(g, sig, side):
        word: Tuple[str, ...] = ()
        origin: Tuple[int, ...] = ()
        for i, j in enumerate(choice):
            piece = types[i][j]
            word += piece
            origin += (i,) * len(piece)
        summands.append((word, origin))
    return summands


def gamma_dom(g: GammaGenerator, sig: NormalizedSignature) -> NormalForm:
    """The normal form of the product of the factors' domains."""
    return tuple(word for word, _ in _side(g, sig, "dom"))


def gamma_cod(g: GammaGenerator, sig: NormalizedSignature) -> NormalForm:
    return tuple(word for word, _ in _side(g, sig, "cod"))


def origins(g: GammaGenerator, sig: NormalizedSignature, side: Side) -> List[Tuple[int, ...]]:
    """
    Factor index of every wire position, per summand.

    Args:
        g: The generator
        sig: Signature resolving the generator's morphism names
        side: ``"dom"`` or ``"cod"``

    Returns:
        One tuple per summand, as long as the summand's word

    Raises:
        UnknownMorphism: If a factor names a morphism missing from ``sig``
    """
    return [origin for _, origin in _side(g, sig, side)]


def wire_counts(origin: Sequence[int], factor_index: int) -> int:
    return sum(1 for i in origin if i == factor_index)
