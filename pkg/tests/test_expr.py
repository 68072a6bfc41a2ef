from dataclasses import fields, is_dataclass

import numpy as np
import pytest

from expr.errors import ExprError, ExprSyntaxError, MorphismTypeError
from expr.morphisms import (
    Compose,
    DeltaL,
    DeltaR,
    Id,
    Inverse,
    LAnn,
    MorGen,
    MProd,
    MSum,
    delta_chain,
    format_morexpr,
    infer_type,
    is_structural,
    normalization_morphism,
)
from expr.objects import (
    ONE_NF,
    ZERO_NF,
    Gen,
    One,
    Prod,
    Sum,
    Zero,
    embed,
    format_normal_form,
    format_objexpr,
    is_regular,
    nf_product,
    normalize,
)
from expr.parser import parse_morexpr, parse_object_list, parse_objexpr
from tests.conftest import random_objexpr

A, B, C, D = Gen("A"), Gen("B"), Gen("C"), Gen("D")


def count_distributors(m) -> int:
    if isinstance(m, (DeltaL, DeltaR)):
        return 1
    if not is_dataclass(m):
        return 0
    return sum(count_distributors(getattr(m, f.name)) for f in fields(m))


def test_normalize_distributes_left_major() -> None:
    assert normalize(parse_objexpr("(A+B)*(C+D)")) == (("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"))


def test_normalize_units() -> None:
    assert normalize(Zero()) == ()
    assert normalize(parse_objexpr("I*I")) == ((),)
    assert normalize(parse_objexpr("O*(A+B)")) == ()
    assert normalize(parse_objexpr("I*A + O")) == (("A",),)


def test_nf_product() -> None:
    left, right = (("A",), ("B",)), (("C",), ("D",))
    assert nf_product(left, right) == (("A", "C"), ("A", "D"), ("B", "C"), ("B", "D"))
    assert nf_product((), right) == ()
    assert nf_product(((),), right) == right


def test_nf_product_agrees_with_normalize() -> None:
    for x, y in [("A+B", "C"), ("A*B+C", "D+I"), ("O", "A"), ("(A+B)*C", "B+D")]:
        ex, ey = parse_objexpr(x), parse_objexpr(y)
        assert normalize(Prod(ex, ey)) == nf_product(normalize(ex), normalize(ey))


def test_is_regular() -> None:
    assert is_regular((("A", "B"), ("B", "A")))
    assert not is_regular((("A", "B"), ("A", "B")))
    assert not is_regular((("A", "A"),))
    assert is_regular(())


def test_embed_is_right_of_normalize() -> None:
    nf = normalize(parse_objexpr("(A+B)*(C+D)"))
    assert normalize(embed(nf)) == nf


@pytest.mark.parametrize("seed", range(10))
def test_normal_form_of_nested_products(seed: int) -> None:
    rng = np.random.default_rng(seed)
    for _ in range(1_000):
        a, b, c = (random_objexpr(rng) for _ in range(3))
        inner_right = normalize(Prod(a, embed(normalize(Prod(b, c)))))
        inner_left = normalize(Prod(embed(normalize(Prod(a, b))), c))
        assert inner_right == inner_left


def test_normalize_after_embed_is_the_identity() -> None:
    rng = np.random.default_rng(11)
    for _ in range(2_000):
        nf = normalize(random_objexpr(rng))
        assert normalize(embed(nf)) == nf
        assert embed(normalize(embed(nf))) == embed(nf)


def test_nf_product_is_a_monoid_with_zero() -> None:
    rng = np.random.default_rng(12)
    for _ in range(2_000):
        a, b, c = (random_objexpr(rng) for _ in range(3))
        x, y, z = normalize(a), normalize(b), normalize(c)
        assert nf_product(nf_product(x, y), z) == nf_product(x, nf_product(y, z))
        assert nf_product(ONE_NF, x) == x == nf_product(x, ONE_NF)
        assert nf_product(ZERO_NF, x) == ZERO_NF == nf_product(x, ZERO_NF)
        assert normalize(Prod(a, b)) == nf_product(x, y)
        assert normalize(Sum(a, b)) == x + y


def test_parser_precedence_and_associativity() -> None:
    assert parse_objexpr("A+B*C") == Sum(A, Prod(B, C))
    assert parse_objexpr("A+B+C") == Sum(Sum(A, B), C)
    assert parse_objexpr("(A+B)*C") == Prod(Sum(A, B), C)
    assert parse_objexpr("O + I") == Sum(Zero(), One())


def test_parser_reports_position() -> None:
    with pytest.raises(ExprSyntaxError) as info:
        parse_objexpr("A+")
    assert info.value.position == 2
    with pytest.raises(ExprSyntaxError):
        parse_objexpr("A $ B")
    with pytest.raises(ExprSyntaxError):
        parse_morexpr("sym(A)")


def test_reserved_generator_names() -> None:
    with pytest.raises(ExprError):
        Gen("O")
    with pytest.raises(ExprError):
        Gen("1x")


def test_object_list() -> None:
    assert parse_object_list("A, B+C, D") == [A, Sum(B, C), D]
    assert parse_object_list("  ") == []


def test_semicolon_is_diagrammatic() -> None:
    assert parse_morexpr("f ; g") == Compose(MorGen("g"), MorGen("f"))


def test_format_morexpr_reads_back() -> None:
    for text in ["f ; id(C) * g", "sym(A, B) + id(C)", "inv(dl(A, B, C)) ; f", "(f + g) * id(A + B)"]:
        m = parse_morexpr(text)
        assert parse_morexpr(format_morexpr(m)) == m
    assert format_morexpr(parse_morexpr("f ; id(C)*g")) == "f ; id(C) * g"


def test_format_objexpr_reads_back() -> None:
    for text in ["A + B*C", "(A+B)*(C+D)", "A*(B*C)", "A + (B + C)", "O", "I*A"]:
        e = parse_objexpr(text)
        assert parse_objexpr(format_objexpr(e)) == e


def test_format_normal_form() -> None:
    assert format_normal_form(()) == "O"
    assert format_normal_form(((),)) == "I"
    assert format_normal_form((("A", "C"), ("A", "D"))) == "A*C + A*D"


def test_normalization_morphism_base_cases() -> None:
    assert normalization_morphism(Zero()) == Id(Zero())
    assert normalization_morphism(Sum(A, B)) == MSum(Id(A), Id(B))


def test_normalization_morphism_of_product() -> None:
    expected = Compose(
        Compose(MSum(Id(Prod(A, C)), Id(Prod(B, C))), DeltaR(A, B, C)),
        MProd(MSum(Id(A), Id(B)), Id(C)),
    )
    assert normalization_morphism(Prod(Sum(A, B), C)) == expected


@pytest.mark.parametrize("text", ["(A+B)*(C+D)", "A*(B+C)*D", "(A+I)*(O+B)", "A+B*(C+D*(A+B))"])
def test_normalization_morphism_is_typed(text: str) -> None:
    e = parse_objexpr(text)
    n = normalization_morphism(e)
    assert is_structural(n)
    dom, cod = infer_type(n, {})
    assert normalize(dom) == normalize(e)
    assert normalize(cod) == normalize(e)


def test_delta_chain() -> None:
    assert delta_chain(1, 1, [("A",)], [("B",)]) == Id(Prod(A, B))
    b1, b2 = Gen("B1"), Gen("B2")
    assert delta_chain(0, 2, [], [("B1",), ("B2",)]) == LAnn(Sum(b1, b2))
    assert count_distributors(delta_chain(2, 2, [("A",), ("B",)], [("C",), ("D",)])) == 3


def test_delta_chain_rejects_wrong_counts() -> None:
    with pytest.raises(ExprError):
        delta_chain(2, 1, [("A",)], [("B",)])


def test_infer_type_rejects_mismatched_composite() -> None:
    typing = {"f": ((("A",),), (("B",),)), "g": ((("C",),), (("D",),))}
    with pytest.raises(MorphismTypeError):
        infer_type(parse_morexpr("f ; g"), typing)
    dom, cod = infer_type(parse_morexpr("f * g"), typing)
    assert normalize(dom) == (("A", "C"),)
    assert normalize(cod) == (("B", "D"),)


def test_only_structural_morphisms_invert() -> None:
    with pytest.raises(ExprError):
        infer_type(Inverse(MorGen("f")), {"f": ((("A",),), (("B",),))})
    dom, cod = infer_type(parse_morexpr("inv(sym(A, B))"), {})
    assert (dom, cod) == (Sum(B, A), Sum(A, B))


def test_unknown_generator() -> None:
    with pytest.raises(ExprError):
        infer_type(MorGen("f"), {})
