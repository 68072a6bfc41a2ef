import pytest

from algebra.compiler import compile_morphism
from algebra.errors import AlgebraError, BoundaryMismatch, MorphismTypeError
from algebra.operations import (
    compose,
    compose_all,
    generator,
    identity,
    invert_swaps,
    permute,
    reorder,
    reorder_inverse,
    sum_all,
    sum_diagrams,
    tensor,
    whisker_left,
    whisker_right,
)
from algebra.structural import structural
from diagram.io import parse_diagram, serialize_diagram
from diagram.model import Seam, SeamNode, Swap
from diagram.validate import validate
from equiv.permutation import invert_permutation, swap_permutation
from expr.morphisms import DeltaL, DeltaR, Inverse, LAnn, MorGen, Sym, normalization_morphism
from expr.objects import Gen, Sum, normalize
from expr.parser import parse_morexpr, parse_objexpr
from signature.errors import UnknownMorphism
from signature.model import EMPTY_SIGNATURE
from tests.conftest import gen

A, B, C, D = Gen("A"), Gen("B"), Gen("C"), Gen("D")


def test_identities() -> None:
    t = identity([("A",), ("B", "C")])
    assert len(t.diagram.input_sheets) == 2 and t.slices == ()
    assert t.dom == t.cod == (("A",), ("B", "C"))
    assert identity([]).dom == ()
    assert identity([()]).dom == ((),)


def test_generator_with_pass_through(fcg) -> None:
    assert fcg.dom == (("A", "C", "B", "D"), ("A", "B", "C", "B", "D"))
    assert fcg.cod == (("C", "C", "A"), ("C", "C", "D"))
    assert fcg.slices == (
        Seam(
            0,
            2,
            2,
            (
                SeamNode(0, (1, 2), (1, 1), "f"),
                SeamNode(1, (2, 2), (1, 1), "g"),
            ),
        ),
    )
    assert fcg.seams[0].passes == 1


def test_generator_of_a_single_morphism(mixed_sig) -> None:
    t = generator(gen("f"), mixed_sig)
    seam = t.slices[0]
    assert (seam.n_in, seam.n_out, len(seam.nodes)) == (2, 1, 1)
    assert t.dom == (("A",), ("A", "B"))
    assert t.cod == (("C",),)


def test_identity_generator_has_no_seam(mixed_sig) -> None:
    t = generator(gen("1:A"), mixed_sig)
    assert t.slices == ()
    assert t.dom == (("A",),)


def test_generator_document_reads_back(fcg, mixed_sig) -> None:
    assert validate(parse_diagram(serialize_diagram(fcg.diagram)), mixed_sig) == fcg


def test_compose(mixed_sig) -> None:
    f = generator(gen("f"), mixed_sig)
    c = generator(gen("c"), mixed_sig)
    t = compose(f, c)
    assert len(t.slices) == 2
    assert t.dom == f.dom and t.cod == c.cod
    with pytest.raises(BoundaryMismatch):
        compose(c, f)


def test_compose_with_identities_is_neutral(fcg) -> None:
    t = compose_all(identity(fcg.dom, fcg.signature), fcg, identity(fcg.cod, fcg.signature))
    assert t.diagram == fcg.diagram


def test_sum_shifts_the_second_operand(mixed_sig) -> None:
    f = generator(gen("f"), mixed_sig)
    g = generator(gen("g"), mixed_sig)
    t = sum_diagrams(f, g)
    assert t.dom == f.dom + g.dom
    assert t.cod == f.cod + g.cod
    assert [piece.offset for piece in t.slices] == [0, 1]
    assert validate(t.diagram, mixed_sig) == t


def test_sum_all_of_nothing_is_empty() -> None:
    assert sum_all([]).dom == ()


def test_whiskering(mixed_sig) -> None:
    g = generator(gen("g"), mixed_sig)
    left = whisker_left(("E",), g)
    assert left.dom == (("E", "B", "D"),)
    assert left.cod == (("E", "A"), ("E", "D"))
    assert left.slices[0].nodes[0].offset == 1
    assert left.seams[0].generator == gen("1:E", "g")
    right = whisker_right(g, ("E",))
    assert right.dom == (("B", "D", "E"),)
    assert right.cod == (("A", "E"), ("D", "E"))
    assert right.slices[0].nodes[0].offset == 0
    assert whisker_left((), g) is g


def test_permute_uses_inversion_count() -> None:
    t = permute([("A",), ("B",), ("C",)], [2, 0, 1])
    assert t.cod == (("C",), ("A",), ("B",))
    assert len(t.slices) == 2
    assert swap_permutation(t) == (2, 0, 1)
    with pytest.raises(AlgebraError):
        permute([("A",), ("B",)], [0, 0])


def test_reorder() -> None:
    row = [[("A",), ("B",), ("C",)]]
    assert reorder(1, 3, row).slices == ()
    assert reorder(3, 1, [[("A",)], [("B",)], [("C",)]]).slices == ()
    grid = [[("A", "C"), ("A", "D")], [("B", "C"), ("B", "D")]]
    t = reorder(2, 2, grid)
    assert t.slices == (Swap(1),)
    assert t.cod == (("A", "C"), ("B", "C"), ("A", "D"), ("B", "D"))
    back = reorder_inverse(2, 2, grid)
    assert compose(t, back).cod == t.dom


def test_tensor_of_unary_generators(unary_sig) -> None:
    f = generator(gen("f"), unary_sig)
    g = generator(gen("g"), unary_sig)
    t = tensor(f, g)
    assert t.dom == (("A", "C"),)
    assert t.cod == (("B", "D"),)
    assert [s.generator for s in t.seams] == [gen("1:A", "g"), gen("f", "1:D")]


def test_tensor_boundaries_are_products(mixed_sig) -> None:
    f = generator(gen("f"), mixed_sig)
    g = generator(gen("g"), mixed_sig)
    t = tensor(f, g)
    assert t.dom == (("A", "B", "D"), ("A", "B", "B", "D"))
    assert t.cod == (("C", "A"), ("C", "D"))
    # one copy of g per summand of dom f, one copy of f per summand of cod g
    assert t.diagram.node_count == 4


def test_tensor_with_unit_and_zero(mixed_sig) -> None:
    g = generator(gen("g"), mixed_sig)
    unit = identity([()], mixed_sig)
    assert tensor(unit, g).diagram == g.diagram
    zero = identity([], mixed_sig)
    assert tensor(zero, g).dom == ()
    assert tensor(g, zero).cod == ()


def test_structural_diagrams() -> None:
    t = structural(DeltaR(A, B, C))
    assert t.slices == ()
    assert t.dom == (("A", "C"), ("B", "C"))
    t = structural(DeltaL(Sum(A, B), C, D))
    assert t.dom == (("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"))
    assert t.cod == (("A", "C"), ("B", "C"), ("A", "D"), ("B", "D"))
    assert all(isinstance(piece, Swap) for piece in t.slices)
    assert swap_permutation(t) == (0, 2, 1, 3)
    empty = structural(LAnn(A))
    assert empty.dom == empty.cod == ()


def test_compile_generator(mixed_sig) -> None:
    assert compile_morphism(MorGen("f"), mixed_sig) == generator(gen("f"), mixed_sig)


def test_compile_boundaries_follow_normal_forms(mixed_sig) -> None:
    m = parse_morexpr("f * id(B) ; c * id(B)")
    t = compile_morphism(m, mixed_sig)
    assert t.dom == normalize(parse_objexpr("(A + A*B)*B"))
    assert t.cod == normalize(parse_objexpr("(A + D)*B"))


def test_compile_normalization_morphism_is_a_permutation() -> None:
    e = parse_objexpr("(A+B)*(C+D)")
    t = compile_morphism(normalization_morphism(e), EMPTY_SIGNATURE)
    assert t.dom == t.cod == normalize(e)
    assert swap_permutation(t) == (0, 1, 2, 3)


def test_compile_inverse() -> None:
    sym = Sym(A, Sum(B, C))
    forward = compile_morphism(sym, EMPTY_SIGNATURE)
    backward = compile_morphism(Inverse(sym), EMPTY_SIGNATURE)
    assert swap_permutation(forward) == (1, 2, 0)
    assert swap_permutation(backward) == invert_permutation(swap_permutation(forward))


def test_compile_errors(mixed_sig) -> None:
    with pytest.raises(MorphismTypeError):
        compile_morphism(parse_morexpr("f ; f"), mixed_sig)
    with pytest.raises(UnknownMorphism):
        compile_morphism(MorGen("q"), mixed_sig)


def test_only_swap_diagrams_invert(fcg) -> None:
    with pytest.raises(AlgebraError):
        invert_swaps(fcg)
