"""
Model documents::

    carriers:
      A: [a0, a1]
      C: [c0]
    tables:
      f:
        "0:(a0)": "0:(c0)"
        "0:(a1)": "0:(c0)"

Elements are written ``j:(t1,t2,...)``: the summand index, then one token
per wire.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path
from typing import Any, Dict, Optional, Union

import yaml

from semantics.errors import ModelError
from semantics.model import Element, EvalModel, check_model
from signature.model import NormalizedSignature

logger = logging.getLogger(__name__)

_ELEMENT = re.compile(r"\s*(\d+)\s*:\s*\(([^()]*)\)\s*\Z")
_TOKEN = re.compile(r"[^\s,():]+\Z")


def parse_element(text: str) -> Element:
    match = _ELEMENT.match(str(text))
    if match is None:
        raise ModelError(f"Malformed element {text!r}: expected 'j:(t1,t2,...)'")
    body = match.group(2).strip()
    tokens = tuple(tok.strip() for tok in body.split(",")) if body else ()
    if any(not _TOKEN.match(tok) for tok in tokens):
        raise ModelError(f"Malformed token in element {text!r}")
    return Element(int(match.group(1)), tokens)


def format_element(e: Element) -> str:
    return str(e)


def model_from_dict(data: Any) -> EvalModel:
    if not isinstance(data, dict) or set(data) - {"carriers", "tables"}:
        raise ModelError("Model document must be a mapping with 'carriers' and 'tables'")
    raw_carriers = data.get("carriers") or {}
    raw_tables = data.get("tables") or {}
    if not isinstance(raw_carriers, dict) or not isinstance(raw_tables, dict):
        raise ModelError("'carriers' and 'tables' must be mappings")
    carriers = {}
    for name, tokens in raw_carriers.items():
        if not isinstance(tokens, list):
            raise ModelError(f"Carrier of {name!r} must be a list of tokens")
        tokens = tuple(str(tok) for tok in tokens)
        if any(not _TOKEN.match(tok) for tok in tokens) or len(set(tokens)) != len(tokens):
            raise ModelError(f"Carrier of {name!r} must list distinct tokens without ',', ':' or parentheses")
        carriers[str(name)] = tokens
    tables: Dict[str, Dict[Element, Element]] = {}
    for name, pairs in raw_tables.items():
        if not isinstance(pairs, dict):
            raise ModelError(f"Table of {name!r} must map input elements to output elements")
        tables[str(name)] = {parse_element(k): parse_element(v) for k, v in pairs.items()}
    return EvalModel(carriers=carriers, tables=tables)


def parse_model(text: str, sig: Optional[NormalizedSignature] = None) -> EvalModel:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ModelError(f"Malformed model document: {e}") from e
    model = model_from_dict(data)
    if sig is not None:
        check_model(model, sig)
    return model


def load_model(path: Union[str, Path], sig: Optional[NormalizedSignature] = None) -> EvalModel:
    model = parse_model(Path(path).read_text(encoding="utf-8"), sig)
    logger.info("Loaded model %s with %d tables", path, len(model.tables))
    return model


def dump_model(m: EvalModel) -> str:
    lines = ["carriers:" if m.carriers else "carriers: {}"]
    for name, tokens in m.carriers.items():
        lines.append(f"  {name}: [" + ", ".join(tokens) + "]")
    lines.append("tables:" if m.tables else "tables: {}")
    for name, table in m.tables.items():
        if not table:
            lines.append(f"  {name}: {{}}")
            continue
        lines.append(f"  {name}:")
        for e in sorted(table):
            lines.append(f'    "{format_element(e)}": "{format_element(table[e])}"')
    return "\n".join(lines) + "\n"
