"""
Reading and writing diagram documents.

The document layout is::

    inputs: [ 1, 2, 2 ]
    slices:
    - offset: 1
      inputs: 1
      outputs: 2
      nodes:
      - offset: 0
        inputs: [ 1 ]
        outputs: [ 1, 1 ]

with optional extensions: a top-level ``labels`` list giving the wire
labels of every input sheet, ``label`` on nodes, ``kind: swap`` slices
and ``through`` on seams without input sheets.  Serialization is
canonical: two-space indentation, fields in the order above, extensions
written only when they carry information.
"""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, List, Sequence, Union

import yaml

from diagram.errors import DiagramSchemaError, DiagramSyntaxError
from diagram.model import UNLABELED, Seam, SeamNode, SheetDiagram, Slice, Swap

logger = logging.getLogger(__name__)

_TOP_FIELDS = {"inputs", "labels", "slices"}
_SEAM_FIELDS = {"kind", "offset", "inputs", "outputs", "through", "nodes"}
_SWAP_FIELDS = {"kind", "offset"}
_NODE_FIELDS = {"offset", "inputs", "outputs", "label"}


def _count(value: Any, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise DiagramSchemaError(field, f"expected a nonnegative integer, got {value!r}")
    return value


def _counts(value: Any, field: str) -> List[int]:
    if not isinstance(value, list):
        raise DiagramSchemaError(field, f"expected a list of counts, got {value!r}")
    return [_count(v, f"{field}[{i}]") for i, v in enumerate(value)]


def _label(value: Any, field: str) -> str:
    if not isinstance(value, str) or not value:
        raise DiagramSchemaError(field, f"expected a label, got {value!r}")
    return value


def _labels(value: Any, field: str) -> List[str]:
    if not isinstance(value, list):
        raise DiagramSchemaError(field, f"expected a list of labels, got {value!r}")
    return [_label(v, f"{field}[{i}]") for i, v in enumerate(value)]


def _mapping(value: Any, field: str, allowed: set) -> dict:
    if not isinstance(value, dict):
        raise DiagramSchemaError(field, f"expected a mapping, got {value!r}")
    unknown = set(value) - allowed
    if unknown:
        raise DiagramSchemaError(f"{field}.{sorted(unknown)[0]}", "unknown field")
    return value


def _require(data: dict, key: str, field: str) -> Any:
    if key not in data:
        raise DiagramSchemaError(f"{field}.{key}" if field else key, "missing field")
    return data[key]


def _node_from_dict(data: Any, field: str) -> SeamNode:
    data = _mapping(data, field, _NODE_FIELDS)
    return SeamNode(
        offset=_count(_require(data, "offset", field), f"{field}.offset"),
        in_wires=tuple(_counts(_require(data, "inputs", field), f"{field}.inputs")),
        out_wires=tuple(_counts(_require(data, "outputs", field), f"{field}.outputs")),
        label=_label(data["label"], f"{field}.label") if "label" in data else UNLABELED,
    )


def _slice_from_dict(data: Any, field: str) -> Slice:
    if not isinstance(data, dict):
        raise DiagramSchemaError(field, f"expected a mapping, got {data!r}")
    kind = data.get("kind", "seam")
    if kind == "swap":
        data = _mapping(data, field, _SWAP_FIELDS)
        return Swap(_count(_require(data, "offset", field), f"{field}.offset"))
    if kind != "seam":
        raise DiagramSchemaError(f"{field}.kind", f"expected 'seam' or 'swap', got {kind!r}")
    data = _mapping(data, field, _SEAM_FIELDS)
    through: Any = data.get("through", [])
    if isinstance(through, int) and not isinstance(through, bool):
        through = [UNLABELED] * _count(through, f"{field}.through")
    nodes = data.get("nodes") or []
    if not isinstance(nodes, list):
        raise DiagramSchemaError(f"{field}.nodes", "expected a list of nodes")
    return Seam(
        offset=_count(_require(data, "offset", field), f"{field}.offset"),
        n_in=_count(_require(data, "inputs", field), f"{field}.inputs"),
        n_out=_count(_require(data, "outputs", field), f"{field}.outputs"),
        nodes=tuple(_node_from_dict(n, f"{field}.nodes[{i}]") for i, n in enumerate(nodes)),
        through=tuple(_labels(through, f"{field}.through")),
    )


def diagram_from_dict(data: Any) -> SheetDiagram:
    data = _mapping(data, "document", _TOP_FIELDS)
    sizes = _counts(_require(data, "inputs", ""), "inputs")
    if "labels" in data:
        raw = data["labels"]
        if not isinstance(raw, list) or len(raw) != len(sizes):
            raise DiagramSchemaError("labels", f"expected {len(sizes)} label lists, one per input sheet")
        sheets = []
        for i, (size, word) in enumerate(zip(sizes, raw)):
            labels = _labels(word, f"labels[{i}]")
            if len(labels) != size:
                raise DiagramSchemaError(f"labels[{i}]", f"expected {size} labels, got {len(labels)}")
            sheets.append(tuple(labels))
    else:
        sheets = [(UNLABELED,) * size for size in sizes]
    slices = data.get("slices") or []
    if not isinstance(slices, list):
        raise DiagramSchemaError("slices", "expected a list of slices")
    return SheetDiagram(
        tuple(sheets), tuple(_slice_from_dict(s, f"slices[{i}]") for i, s in enumerate(slices))
    )


def parse_diagram(text: str) -> SheetDiagram:
    """
    Parse a diagram document.

    Raises:
        DiagramSyntaxError: If the text is not a well-formed document
        DiagramSchemaError: If a field is missing, unknown or of the wrong kind
    """
    try:
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as e:
        mark = e.problem_mark or e.context_mark
        line, column = (mark.line + 1, mark.column + 1) if mark is not None else (0, 0)
        raise DiagramSyntaxError(e.problem or str(e), line, column) from e
    except yaml.YAMLError as e:
        raise DiagramSyntaxError(str(e), 0, 0) from e
    if data is None:
        raise DiagramSchemaError("inputs", "missing field")
    return diagram_from_dict(data)


def _scalar(label: str) -> str:
    """Quote labels that would not read back as the same string."""
    try:
        plain = yaml.safe_load(label) == label
    except yaml.YAMLError:
        plain = False
    return label if plain else '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _flow(items: Sequence[Any]) -> str:
    return "[ " + ", ".join(str(i) for i in items) + " ]" if items else "[]"


def serialize_diagram(d: SheetDiagram) -> str:
    lines = [f"inputs: {_flow([len(w) for w in d.input_sheets])}"]
    if any(label != UNLABELED for word in d.input_sheets for label in word):
        lines.append("labels: " + _flow([_flow([_scalar(x) for x in word]) for word in d.input_sheets]))
    if not d.slices:
        lines.append("slices: []")
    else:
        lines.append("slices:")
    for piece in d.slices:
        if isinstance(piece, Swap):
            lines.append("- kind: swap")
            lines.append(f"  offset: {piece.offset}")
            continue
        lines.append(f"- offset: {piece.offset}")
        lines.append(f"  inputs: {piece.n_in}")
        lines.append(f"  outputs: {piece.n_out}")
        if piece.through:
            if all(x == UNLABELED for x in piece.through):
                lines.append(f"  through: {len(piece.through)}")
            else:
                lines.append(f"  through: {_flow([_scalar(x) for x in piece.through])}")
        if not piece.nodes:
            lines.append("  nodes: []")
            continue
        lines.append("  nodes:")
        for node in piece.nodes:
            lines.append(f"  - offset: {node.offset}")
            lines.append(f"    inputs: {_flow(node.in_wires)}")
            lines.append(f"    outputs: {_flow(node.out_wires)}")
            if node.label != UNLABELED:
                lines.append(f"    label: {_scalar(node.label)}")
    return "\n".join(lines) + "\n"


def load_diagram(path: Union[str, Path]) -> SheetDiagram:
    return parse_diagram(Path(path).read_text(encoding="utf-8"))


def dump_diagram(d: SheetDiagram, path: Union[str, Path]) -> None:
    Path(path).write_text(serialize_diagram(d), encoding="utf-8")
    logger.info("Wrote diagram with %d slices to %s", len(d.slices), path)
