import pytest

from algebra.operations import compose, generator, sum_diagrams
from diagram.errors import (
    ArityMismatch,
    DiagramError,
    DiagramSchemaError,
    DiagramSyntaxError,
    OffsetOutOfRange,
    PassThroughInconsistent,
    TypingViolation,
    UnknownMorphism,
    UnlabeledDiagram,
)
from diagram.io import dump_diagram, load_diagram, parse_diagram, serialize_diagram
from diagram.model import Seam, SeamNode, SheetDiagram, Swap, make_diagram, sheet_sizes
from diagram.skeleton import SkeletonNode, SkeletonSwap, compose_skeletons, format_skeleton, skeleton, sum_skeletons
from diagram.validate import validate
from signature.errors import UnknownMorphism as SignatureUnknownMorphism
from signature.model import EMPTY_SIGNATURE
from tests.conftest import SAMPLE, SAMPLE_LABELED, gen, load


def test_parse_sample_document(sample) -> None:
    assert sample.input_sheets == (("_",), ("_", "_"), ("_", "_"))
    assert sample.slices == (
        Seam(1, 1, 2, (SeamNode(0, (1,), (1, 1)),)),
        Seam(2, 2, 2, (SeamNode(0, (2, 2), (1, 1)),)),
    )
    assert not sample.is_labeled
    assert sample.node_count == 2


def test_sample_sheet_sizes(sample) -> None:
    assert sheet_sizes(sample) == [[1, 2, 2], [1, 2, 2, 2], [1, 2, 1, 1]]


def test_canonical_documents_serialize_unchanged(sample) -> None:
    assert serialize_diagram(sample) == SAMPLE
    assert serialize_diagram(parse_diagram(SAMPLE_LABELED)) == SAMPLE_LABELED


def test_validate_sample(sample_typed) -> None:
    assert sample_typed.dom == (("X",), ("X", "X"), ("X", "X"))
    assert sample_typed.cod == (("X",), ("X", "X"), ("X",), ("X",))
    assert [len(w) for w in sample_typed.cod] == [1, 2, 1, 1]
    first = sample_typed.seams[0]
    assert first.generator == gen("k", "1:X")
    assert first.passes == 1


def test_unlabeled_diagrams_do_not_validate(sample, sheet_sig) -> None:
    with pytest.raises(UnlabeledDiagram):
        validate(sample, sheet_sig)


def test_empty_diagram() -> None:
    d = parse_diagram("inputs: []\nslices: []\n")
    assert d == SheetDiagram()
    t = validate(d, EMPTY_SIGNATURE)
    assert t.dom == t.cod == ()
    assert serialize_diagram(d) == "inputs: []\nslices: []\n"


def test_node_consuming_too_many_wires(unary_sig) -> None:
    d = make_diagram([["A"]], [Seam(0, 1, 1, (SeamNode(0, (2,), (1,), "f"),))])
    with pytest.raises(ArityMismatch):
        validate(d, unary_sig)
    with pytest.raises(ArityMismatch):
        sheet_sizes(d)


def test_structural_errors() -> None:
    with pytest.raises(DiagramError):
        Seam(0, 1, 1)
    with pytest.raises(ArityMismatch):
        Seam(0, 2, 1, (SeamNode(0, (1,), (1,)),))
    with pytest.raises(OffsetOutOfRange):
        Seam(0, 1, 1, (SeamNode(1, (1,), (1,)), SeamNode(0, (1,), (1,))))
    with pytest.raises(OffsetOutOfRange):
        Swap(-1)
    with pytest.raises(OffsetOutOfRange):
        validate(make_diagram([["A"], ["B"]], [Swap(1)]), EMPTY_SIGNATURE)


def test_typing_violation(unary_sig) -> None:
    d = make_diagram([["C"]], [Seam(0, 1, 1, (SeamNode(0, (1,), (1,), "f"),))])
    with pytest.raises(TypingViolation):
        validate(d, unary_sig)


def test_unknown_node_label(unary_sig) -> None:
    d = make_diagram([["A"]], [Seam(0, 1, 1, (SeamNode(0, (1,), (1,), "q"),))])
    with pytest.raises(UnknownMorphism) as info:
        validate(d, unary_sig)
    assert isinstance(info.value, SignatureUnknownMorphism)
    assert info.value.slice_index == 0


def test_pass_through_counts_must_agree() -> None:
    sig = load("objects: [A, B, C]\nmorphisms:\n  h: { dom: 'A + A', cod: B }\n")
    node = SeamNode(0, (1, 1), (1,), "h")
    uneven = make_diagram([["A", "C"], ["A"]], [Seam(0, 2, 1, (node,))])
    with pytest.raises(PassThroughInconsistent):
        validate(uneven, sig)
    mixed = make_diagram([["A", "C"], ["A", "B"]], [Seam(0, 2, 1, (node,))])
    with pytest.raises(PassThroughInconsistent):
        validate(mixed, sig)


def test_seam_without_inputs_keeps_its_pass_through() -> None:
    sig = load("objects: [A, C]\nmorphisms:\n  z: { dom: O, cod: A }\n")
    t = generator(gen("1:C", "z"), sig)
    seam = t.slices[0]
    assert seam == Seam(0, 0, 1, (SeamNode(1, (), (1,), "z"),), ("C",))
    assert t.dom == ()
    assert t.cod == (("C", "A"),)
    text = serialize_diagram(t.diagram)
    assert "through: [ C ]" in text
    assert parse_diagram(text) == t.diagram


def test_swap_documents(tmp_path) -> None:
    d = make_diagram([["A"], ["B"]], [Swap(0)])
    text = serialize_diagram(d)
    assert text == "inputs: [ 1, 1 ]\nlabels: [ [ A ], [ B ] ]\nslices:\n- kind: swap\n  offset: 0\n"
    path = tmp_path / "swap.yaml"
    dump_diagram(d, path)
    assert load_diagram(path) == d
    assert validate(d, EMPTY_SIGNATURE).cod == (("B",), ("A",))


def test_labels_needing_quotes_read_back() -> None:
    d = make_diagram([["yes", "1"]])
    assert parse_diagram(serialize_diagram(d)) == d


@pytest.mark.parametrize(
    "text, field",
    [
        ("inputs: [1, -1]\n", "inputs[1]"),
        ("slices: []\n", "inputs"),
        ("inputs: [1]\nslices:\n- offset: 0\n  inputs: 1\n  outputs: 2\n  color: red\n", "slices[0].color"),
        ("inputs: [1]\nslices:\n- kind: twist\n  offset: 0\n", "slices[0].kind"),
        ("inputs: [1]\nlabels: [[A, B]]\n", "labels[0]"),
        (
            "inputs: [1]\nslices:\n- offset: 0\n  inputs: 1\n  outputs: 1\n  nodes:\n  - offset: 0\n    inputs: [1]\n",
            "slices[0].nodes[0].outputs",
        ),
    ],
)
def test_schema_errors(text: str, field: str) -> None:
    with pytest.raises(DiagramSchemaError) as info:
        parse_diagram(text)
    assert info.value.field == field


def test_syntax_errors_carry_a_position() -> None:
    with pytest.raises(DiagramSyntaxError) as info:
        parse_diagram("inputs: [1, 2\nslices: []\n")
    assert info.value.line >= 1


def test_skeleton_of_a_generator(fcg) -> None:
    s = skeleton(fcg)
    assert len(s.slices) == 1
    node = s.slices[0]
    assert isinstance(node, SkeletonNode)
    assert node.generator == gen("f", "1:C", "g")
    assert len(node.dom) == 2 and len(node.cod) == 2
    assert s.cod == fcg.cod


def test_skeleton_of_empty_and_swap() -> None:
    assert skeleton(validate(SheetDiagram(), EMPTY_SIGNATURE)).slices == ()
    t = validate(make_diagram([["A"], ["B"]], [Swap(0)]), EMPTY_SIGNATURE)
    s = skeleton(t)
    assert s.slices == (SkeletonSwap(0, ("A",), ("B",)),)
    assert s.cod == (("B",), ("A",))
    assert "swap @0 A <-> B" in format_skeleton(s)


def test_skeleton_respects_composition_and_sum(mixed_sig) -> None:
    f = generator(gen("f"), mixed_sig)
    c = generator(gen("c"), mixed_sig)
    g = generator(gen("g"), mixed_sig)
    assert skeleton(compose(f, c)) == compose_skeletons(skeleton(f), skeleton(c))
    assert skeleton(sum_diagrams(f, g)) == sum_skeletons(skeleton(f), skeleton(g))
    with pytest.raises(DiagramError):
        compose_skeletons(skeleton(c), skeleton(f))
