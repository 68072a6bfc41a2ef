"""
Morphism expressions of the free bimonoidal category: generators,
identities, the three binary operations and the structural isomorphisms.

Composition is written in applicative order: ``Compose(outer, inner)`` is
``outer ∘ inner``.  The text grammar uses diagrammatic order instead
(``inner ; outer``).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence, Tuple, Union

from expr.errors import ExprError, MorphismTypeError
from expr.objects import (
    Gen,
    NormalForm,
    ObjExpr,
    One,
    Prod,
    Sum,
    Word,
    Zero,
    embed,
    embed_word,
    format_objexpr,
    left_sum_of,
    normalize,
)


@dataclass(frozen=True)
class MorGen:
    name: str


@dataclass(frozen=True)
class Id:
    obj: ObjExpr


@dataclass(frozen=True)
class Compose:
    outer: "MorExpr"
    inner: "MorExpr"


@dataclass(frozen=True)
class MSum:
    left: "MorExpr"
    right: "MorExpr"


@dataclass(frozen=True)
class MProd:
    left: "MorExpr"
    right: "MorExpr"


@dataclass(frozen=True)
class Sym:
    """γ'_{A,B} : A ⊕ B → B ⊕ A"""

    a: ObjExpr
    b: ObjExpr


@dataclass(frozen=True)
class DeltaL:
    """δ_{A,B,C} : A(B ⊕ C) → AB ⊕ AC"""

    a: ObjExpr
    b: ObjExpr
    c: ObjExpr


@dataclass(frozen=True)
class DeltaR:
    """δ#_{A,B,C} : (A ⊕ B)C → AC ⊕ BC"""

    a: ObjExpr
    b: ObjExpr
    c: ObjExpr


@dataclass(frozen=True)
class LAnn:
    """λ*_A : O·A → O"""

    a: ObjExpr


@dataclass(frozen=True)
class RAnn:
    """ρ*_A : A·O → O"""

    a: ObjExpr


@dataclass(frozen=True)
class AssocMul:
    """α_{A,B,C} : A(BC) → (AB)C"""

    a: ObjExpr
    b: ObjExpr
    c: ObjExpr


@dataclass(frozen=True)
class AssocAdd:
    """α'_{A,B,C} : A ⊕ (B ⊕ C) → (A ⊕ B) ⊕ C"""

    a: ObjExpr
    b: ObjExpr
    c: ObjExpr


@dataclass(frozen=True)
class UnitLMul:
    """λ_A : I·A → A"""

    a: ObjExpr


@dataclass(frozen=True)
class UnitRMul:
    """ρ_A : A·I → A"""

    a: ObjExpr


@dataclass(frozen=True)
class UnitLAdd:
    """λ'_A : O ⊕ A → A"""

    a: ObjExpr


@dataclass(frozen=True)
class UnitRAdd:
    """ρ'_A : A ⊕ O → A"""

    a: ObjExpr


@dataclass(frozen=True)
class Inverse:
    """Inverse of a structural isomorphism."""

    m: "MorExpr"


Structural = Union[
    Sym, DeltaL, DeltaR, LAnn, RAnn, AssocMul, AssocAdd, UnitLMul, UnitRMul, UnitLAdd, UnitRAdd
]
MorExpr = Union[MorGen, Id, Compose, MSum, MProd, Inverse, Structural]

STRUCTURAL_TYPES = (Sym, DeltaL, DeltaR, LAnn, RAnn, AssocMul, AssocAdd, UnitLMul, UnitRMul, UnitLAdd, UnitRAdd)

# name -> (normalized dom, normalized cod)
Typing = Mapping[str, Tuple[NormalForm, NormalForm]]


def compose_all(*steps: "MorExpr") -> "MorExpr":
    """Compose in applicative order: ``compose_all(h, g, f) = h ∘ g ∘ f``."""
    if not steps:
        raise ExprError("compose_all needs at least one morphism")
    result = steps[-1]
    for step in reversed(steps[:-1]):
        result = Compose(step, result)
    return result


def structural_type(m: Structural) -> Tuple[ObjExpr, ObjExpr]:
    if isinstance(m, Sym):
        return Sum(m.a, m.b), Sum(m.b, m.a)
    if isinstance(m, DeltaL):
        return Prod(m.a, Sum(m.b, m.c)), Sum(Prod(m.a, m.b), Prod(m.a, m.c))
    if isinstance(m, DeltaR):
        return Prod(Sum(m.a, m.b), m.c), Sum(Prod(m.a, m.c), Prod(m.b, m.c))
    if isinstance(m, LAnn):
        return Prod(Zero(), m.a), Zero()
    if isinstance(m, RAnn):
        return Prod(m.a, Zero()), Zero()
    if isinstance(m, AssocMul):
        return Prod(m.a, Prod(m.b, m.c)), Prod(Prod(m.a, m.b), m.c)
    if isinstance(m, AssocAdd):
        return Sum(m.a, Sum(m.b, m.c)), Sum(Sum(m.a, m.b), m.c)
    if isinstance(m, UnitLMul):
        return Prod(One(), m.a), m.a
    if isinstance(m, UnitRMul):
        return Prod(m.a, One()), m.a
    if isinstance(m, UnitLAdd):
        return Sum(Zero(), m.a), m.a
    if isinstance(m, UnitRAdd):
        return Sum(m.a, Zero()), m.a
    raise ExprError(f"Not a structural isomorphism: {m!r}")


def is_structural(m: MorExpr) -> bool:
    """True when ``m`` is built from identities and structural isomorphisms only."""
    if isinstance(m, MorGen):
        return False
    if isinstance(m, (Compose,)):
        return is_structural(m.outer) and is_structural(m.inner)
    if isinstance(m, (MSum, MProd)):
        return is_structural(m.left) and is_structural(m.right)
    if isinstance(m, Inverse):
        return is_structural(m.m)
    return True


def infer_type(m: MorExpr, typing: Typing) -> Tuple[ObjExpr, ObjExpr]:
    """
    Compute the domain and codomain expressions of a morphism expression.

    Args:
        m: The morphism expression
        typing: Normalized domain and codomain of every morphism generator

    Returns:
        (dom, cod) as object expressions; generators contribute the
        re-embedding of their normalized types

    Raises:
        MorphismTypeError: If a composite's boundaries differ after normalization
        ExprError: If a generator is not in ``typing``
    """
    if isinstance(m, MorGen):
        if m.name not in typing:
            raise ExprError(f"Unknown morphism generator {m.name!r}")
        dom, cod = typing[m.name]
        return embed(dom), embed(cod)
    if isinstance(m, Id):
        return m.obj, m.obj
    if isinstance(m, Compose):
        inner_dom, inner_cod = infer_type(m.inner, typing)
        outer_dom, outer_cod = infer_type(m.outer, typing)
        left, right = normalize(inner_cod), normalize(outer_dom)
        if left != right:
            raise MorphismTypeError(format_morexpr(m), left, right)
        return inner_dom, outer_cod
    if isinstance(m, MSum):
        ld, lc = infer_type(m.left, typing)
        rd, rc = infer_type(m.right, typing)
        return Sum(ld, rd), Sum(lc, rc)
    if isinstance(m, MProd):
        ld, lc = infer_type(m.left, typing)
        rd, rc = infer_type(m.right, typing)
        return Prod(ld, rd), Prod(lc, rc)
    if isinstance(m, Inverse):
        if not is_structural(m.m):
            raise ExprError(f"Only structural isomorphisms can be inverted: {format_morexpr(m.m)}")
        dom, cod = infer_type(m.m, typing)
        return cod, dom
    return structural_type(m)


def delta_chain(
    p: int, q: int, summands_left: Sequence[Word], summands_right: Sequence[Word]
) -> MorExpr:
    """
    Build Δ_{p,q} : (⊕_i A_i)(⊕_j B_j) → ⊕_i ⊕_j A_i B_j out of distributors.

    Sums are left-associated, as in ``A_1 ⊕ … ⊕ A_{q-1} ⊕ A_q``.  The left
    factor is split with δ#, each remaining ``A_i (⊕_j B_j)`` with δ.
    """
    if len(summands_left) != p or len(summands_right) != q:
        raise ExprError(f"delta_chain expects {p} and {q} summands")
    lefts = [embed_word(w) for w in summands_left]
    rights = [embed_word(w) for w in summands_right]
    b = left_sum_of(rights)
    if p == 0:
        return LAnn(b)
    if p == 1:
        a = lefts[0]
        if q == 0:
            return RAnn(a)
        if q == 1:
            return Id(Prod(a, rights[0]))
        head = delta_chain(1, q - 1, summands_left, summands_right[:-1])
        return Compose(
            MSum(head, Id(Prod(a, rights[-1]))),
            DeltaL(a, left_sum_of(rights[:-1]), rights[-1]),
        )
    return Compose(
        MSum(
            delta_chain(p - 1, q, summands_left[:-1], summands_right),
            delta_chain(1, q, summands_left[-1:], summands_right),
        ),
        DeltaR(left_sum_of(lefts[:-1]), lefts[-1], b),
    )


def normalization_morphism(e: ObjExpr) -> MorExpr:
    """The isomorphism n_e : e → N(e), built by induction on ``e``."""
    if isinstance(e, (Zero, One, Gen)):
        return Id(e)
    if isinstance(e, Sum):
        return MSum(normalization_morphism(e.left), normalization_morphism(e.right))
    if isinstance(e, Prod):
        left, right = normalize(e.left), normalize(e.right)
        return Compose(
            delta_chain(len(left), len(right), left, right),
            MProd(normalization_morphism(e.left), normalization_morphism(e.right)),
        )
    raise ExprError(f"Not an object expression: {e!r}")


_KEYWORDS = {
    Sym: "sym",
    DeltaL: "dl",
    DeltaR: "dr",
    LAnn: "lann",
    RAnn: "rann",
    AssocMul: "assoc",
    AssocAdd: "assocp",
    UnitLMul: "lunit",
    UnitRMul: "runit",
    UnitLAdd: "lunitp",
    UnitRAdd: "runitp",
}

KEYWORD_CONSTRUCTORS = {name: cls for cls, name in _KEYWORDS.items()}


def _precedence(m: MorExpr) -> int:
    if isinstance(m, Compose):
        return 0
    if isinstance(m, MSum):
        return 1
    if isinstance(m, MProd):
        return 2
    return 3


def _wrap(m: MorExpr, minimum: int) -> str:
    text = format_morexpr(m)
    return f"({text})" if _precedence(m) < minimum else text


def format_morexpr(m: MorExpr) -> str:
    """Render in the text grammar (``;`` diagrammatic, then ``+``, then ``*``)."""
    if isinstance(m, MorGen):
        return m.name
    if isinstance(m, Id):
        return f"id({format_objexpr(m.obj)})"
    if isinstance(m, Compose):
        return f"{_wrap(m.inner, 0)} ; {_wrap(m.outer, 1)}"
    if isinstance(m, MSum):
        return f"{_wrap(m.left, 1)} + {_wrap(m.right, 2)}"
    if isinstance(m, MProd):
        return f"{_wrap(m.left, 2)} * {_wrap(m.right, 3)}"
    if isinstance(m, Inverse):
        return f"inv({format_morexpr(m.m)})"
    keyword = _KEYWORDS.get(type(m))
    if keyword is None:
        raise ExprError(f"Not a morphism expression: {m!r}")
    args = [getattr(m, field) for field in ("a", "b", "c") if hasattr(m, field)]
    return f"{keyword}({', '.join(format_objexpr(a) for a in args)})"
