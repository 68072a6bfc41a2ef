"""
Bimonoidal signatures and their normalized counterparts.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, NamedTuple, Tuple

from expr.errors import ExprError
from expr.objects import NormalForm, ObjExpr, check_identifier, generators_of, normalize
from signature.errors import SignatureError, UnknownMorphism

logger = logging.getLogger(__name__)

# Morphism names that would collide with keywords of the morphism grammar.
RESERVED_MORPHISMS = frozenset(
    {"id", "inv", "sym", "dl", "dr", "lann", "rann", "assoc", "assocp", "lunit", "runit", "lunitp", "runitp"}
)


class MorphismType(NamedTuple):
    dom: ObjExpr
    cod: ObjExpr


class NormalizedType(NamedTuple):
    dom: NormalForm
    cod: NormalForm


def _check_names(objects: Tuple[str, ...], morphisms: Mapping[str, object]) -> None:
    if len(set(objects)) != len(objects):
        raise SignatureError(f"Duplicate object generators in {list(objects)}")
    for name in objects:
        try:
            check_identifier(name)
        except ExprError as e:
            raise SignatureError(str(e)) from e
    for name in morphisms:
        try:
            check_identifier(name)
        except ExprError as e:
            raise SignatureError(str(e)) from e
        if name in RESERVED_MORPHISMS:
            raise SignatureError(f"Morphism name {name!r} is a keyword of the morphism grammar")
        if name in objects:
            raise SignatureError(f"Name {name!r} is used both as object and morphism generator")


@dataclass(frozen=True)
class BimonoidalSignature:
    objects: Tuple[str, ...] = ()
    morphisms: Mapping[str, MorphismType] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _check_names(self.objects, self.morphisms)
        declared = set(self.objects)
        for name, (dom, cod) in self.morphisms.items():
            undeclared = (generators_of(dom) | generators_of(cod)) - declared
            if undeclared:
                raise SignatureError(f"Morphism {name!r} uses undeclared objects {sorted(undeclared)}")


@dataclass(frozen=True)
class NormalizedSignature:
    objects: Tuple[str, ...] = ()
    morphisms: Mapping[str, NormalizedType] = field(default_factory=dict)

    def __post_init__(self) -> None:
        _check_names(self.objects, self.morphisms)
        declared = set(self.objects)
        for name, (dom, cod) in self.morphisms.items():
            used = {x for word in dom + cod for x in word}
            if not used <= declared:
                raise SignatureError(f"Morphism {name!r} uses undeclared objects {sorted(used - declared)}")

    @property
    def is_empty(self) -> bool:
        return not self.morphisms

    def type_of(self, name: str) -> NormalizedType:
        try:
            return self.morphisms[name]
        except KeyError as e:
            raise UnknownMorphism(name) from e


EMPTY_SIGNATURE = NormalizedSignature()


def normalize_signature(s: BimonoidalSignature) -> NormalizedSignature:
    """Replace every morphism's domain and codomain by its normal form."""
    morphisms: Dict[str, NormalizedType] = {
        name: NormalizedType(normalize(dom), normalize(cod)) for name, (dom, cod) in s.morphisms.items()
    }
    logger.debug("Normalized signature with %d objects and %d morphisms", len(s.objects), len(morphisms))
    return NormalizedSignature(objects=s.objects, morphisms=morphisms)
