"""
Signature documents::

    objects: [A, B, C, D]
    morphisms:
      f: { dom: "A + A*B", cod: "C" }
      g: { dom: "B*D",     cod: "A + D" }
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, Union

import yaml

from expr.errors import ExprError
from expr.objects import format_objexpr
from expr.parser import parse_objexpr
from signature.errors import SignatureError
from signature.model import BimonoidalSignature, MorphismType, NormalizedSignature, normalize_signature

logger = logging.getLogger(__name__)


def _parse_object(text: Any, where: str):
    if not isinstance(text, str):
        text = str(text)
    try:
        return parse_objexpr(text)
    except ExprError as e:
        raise SignatureError(f"{where}: {e}") from e


def signature_from_dict(data: Any) -> BimonoidalSignature:
    if data is None:
        return BimonoidalSignature()
    if not isinstance(data, dict):
        raise SignatureError("Signature document must be a mapping with 'objects' and 'morphisms'")
    unknown = set(data) - {"objects", "morphisms"}
    if unknown:
        raise SignatureError(f"Unknown signature fields {sorted(unknown)}")
    objects = data.get("objects") or []
    if not isinstance(objects, list) or not all(isinstance(o, str) for o in objects):
        raise SignatureError("'objects' must be a list of generator names")
    raw = data.get("morphisms") or {}
    if not isinstance(raw, dict):
        raise SignatureError("'morphisms' must be a mapping from names to {dom, cod}")
    morphisms: Dict[str, MorphismType] = {}
    for name, entry in raw.items():
        if not isinstance(entry, dict) or set(entry) != {"dom", "cod"}:
            raise SignatureError(f"Morphism {name!r} must have exactly the fields 'dom' and 'cod'")
        morphisms[str(name)] = MorphismType(
            _parse_object(entry["dom"], f"{name}.dom"),
            _parse_object(entry["cod"], f"{name}.cod"),
        )
    return BimonoidalSignature(objects=tuple(objects), morphisms=morphisms)


def parse_signature(text: str) -> BimonoidalSignature:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise SignatureError(f"Malformed signature document: {e}") from e
    return signature_from_dict(data)


def load_signature(path: Union[str, Path]) -> NormalizedSignature:
    """Read a signature file and return its normalization."""
    text = Path(path).read_text(encoding="utf-8")
    sig = normalize_signature(parse_signature(text))
    logger.info("Loaded signature %s (%d morphisms)", path, len(sig.morphisms))
    return sig


def dump_signature(sig: BimonoidalSignature) -> str:
    lines = ["objects: [" + ", ".join(sig.objects) + "]"]
    if not sig.morphisms:
        lines.append("morphisms: {}")
        return "\n".join(lines) + "\n"
    lines.append("morphisms:")
    for name, (dom, cod) in sig.morphisms.items():
        lines.append(f'  {name}: {{ dom: "{format_objexpr(dom)}", cod: "{format_objexpr(cod)}" }}')
    return "\n".join(lines) + "\n"
