"""
The coherence axioms of bimonoidal categories, as pairs of parallel
morphism expressions.

Each axiom is a commuting diagram; ``axiom_sides`` returns its two paths
as composites in applicative order.  The axioms that only make sense for
a symmetric multiplicative structure are left out, so the numbering skips
II and XV.
"""
from __future__ import annotations

from enum import Enum
from typing import Callable, Dict, Sequence, Tuple

from coherence.errors import AxiomArityError
from expr.morphisms import (
    AssocAdd,
    AssocMul,
    DeltaL,
    DeltaR,
    Id,
    Inverse,
    LAnn,
    MorExpr,
    MProd,
    MSum,
    RAnn,
    Sym,
    UnitLAdd,
    UnitLMul,
    UnitRAdd,
    UnitRMul,
    compose_all,
)
from expr.objects import ObjExpr, One, Prod, Sum, Zero


class AxiomId(str, Enum):
    I = "I"
    III = "III"
    IV = "IV"
    V = "V"
    VI = "VI"
    VII = "VII"
    VIII = "VIII"
    IX = "IX"
    X = "X"
    XI = "XI"
    XII = "XII"
    XIII = "XIII"
    XIV = "XIV"
    XVI = "XVI"
    XVII = "XVII"
    XVIII = "XVIII"
    XIX = "XIX"
    XX = "XX"
    XXI = "XXI"
    XXII = "XXII"
    XXIII = "XXIII"
    XXIV = "XXIV"


Sides = Tuple[MorExpr, MorExpr]


def _p(a: ObjExpr, b: ObjExpr) -> ObjExpr:
    return Prod(a, b)


def _s(a: ObjExpr, b: ObjExpr) -> ObjExpr:
    return Sum(a, b)


def _axiom_i(a, b, c) -> Sides:
    return (
        compose_all(Sym(_p(a, b), _p(a, c)), DeltaL(a, b, c)),
        compose_all(DeltaL(a, c, b), MProd(Id(a), Sym(b, c))),
    )


def _axiom_iii(a, b, c) -> Sides:
    return (
        compose_all(Sym(_p(a, c), _p(b, c)), DeltaR(a, b, c)),
        compose_all(DeltaR(b, a, c), MProd(Sym(a, b), Id(c))),
    )


def _axiom_iv(a, b, c, d) -> Sides:
    ad, bd, cd = _p(a, d), _p(b, d), _p(c, d)
    return (
        compose_all(AssocAdd(ad, bd, cd), MSum(Id(ad), DeltaR(b, c, d)), DeltaR(a, _s(b, c), d)),
        compose_all(MSum(DeltaR(a, b, d), Id(cd)), DeltaR(_s(a, b), c, d), MProd(AssocAdd(a, b, c), Id(d))),
    )


def _axiom_v(a, b, c, d) -> Sides:
    ab, ac, ad = _p(a, b), _p(a, c), _p(a, d)
    return (
        compose_all(AssocAdd(ab, ac, ad), MSum(Id(ab), DeltaL(a, c, d)), DeltaL(a, b, _s(c, d))),
        compose_all(MSum(DeltaL(a, b, c), Id(ad)), DeltaL(a, _s(b, c), d), MProd(Id(a), AssocAdd(b, c, d))),
    )


def _axiom_vi(a, b, c, d) -> Sides:
    return (
        compose_all(
            MSum(AssocMul(a, b, c), AssocMul(a, b, d)),
            DeltaL(a, _p(b, c), _p(b, d)),
            MProd(Id(a), DeltaL(b, c, d)),
        ),
        compose_all(DeltaL(_p(a, b), c, d), AssocMul(a, b, _s(c, d))),
    )


def _axiom_vii(a, b, c, d) -> Sides:
    return (
        compose_all(MSum(AssocMul(a, c, d), AssocMul(b, c, d)), DeltaR(a, b, _p(c, d))),
        compose_all(
            DeltaR(_p(a, c), _p(b, c), d),
            MProd(DeltaR(a, b, c), Id(d)),
            AssocMul(_s(a, b), c, d),
        ),
    )


def _axiom_viii(a, b, c, d) -> Sides:
    return (
        compose_all(
            MSum(AssocMul(a, b, d), AssocMul(a, c, d)),
            DeltaL(a, _p(b, d), _p(c, d)),
            MProd(Id(a), DeltaR(b, c, d)),
        ),
        compose_all(
            DeltaR(_p(a, b), _p(a, c), d),
            MProd(DeltaL(a, b, c), Id(d)),
            AssocMul(a, _s(b, c), d),
        ),
    )


def _axiom_ix(a, b, c, d) -> Sides:
    ac, ad, bc, bd = _p(a, c), _p(a, d), _p(b, c), _p(b, d)
    return (
        compose_all(
            MSum(MSum(Id(ac), Sym(ad, bc)), Id(bd)),
            MSum(Inverse(AssocAdd(ac, ad, bc)), Id(bd)),
            AssocAdd(_s(ac, ad), bc, bd),
            MSum(DeltaL(a, c, d), DeltaL(b, c, d)),
            DeltaR(a, b, _s(c, d)),
        ),
        compose_all(
            MSum(Inverse(AssocAdd(ac, bc, ad)), Id(bd)),
            AssocAdd(_s(ac, bc), ad, bd),
            MSum(DeltaR(a, b, c), DeltaR(a, b, d)),
            DeltaL(_s(a, b), c, d),
        ),
    )


def _axiom_x() -> Sides:
    return LAnn(Zero()), RAnn(Zero())


def _axiom_xi(a, b) -> Sides:
    return (
        LAnn(_s(a, b)),
        compose_all(UnitLAdd(Zero()), MSum(LAnn(a), LAnn(b)), DeltaL(Zero(), a, b)),
    )


def _axiom_xii(a, b) -> Sides:
    return (
        RAnn(_s(a, b)),
        compose_all(UnitLAdd(Zero()), MSum(RAnn(a), RAnn(b)), DeltaR(a, b, Zero())),
    )


def _axiom_xiii() -> Sides:
    return UnitRMul(Zero()), LAnn(One())


def _axiom_xiv() -> Sides:
    return UnitLMul(Zero()), RAnn(One())


def _axiom_xvi(a, b) -> Sides:
    return (
        LAnn(_p(a, b)),
        compose_all(LAnn(b), MProd(LAnn(a), Id(b)), AssocMul(Zero(), a, b)),
    )


def _axiom_xvii(a, b) -> Sides:
    return (
        compose_all(RAnn(a), MProd(Id(a), LAnn(b))),
        compose_all(LAnn(b), MProd(RAnn(a), Id(b)), AssocMul(a, Zero(), b)),
    )


def _axiom_xviii(a, b) -> Sides:
    return (
        compose_all(RAnn(a), MProd(Id(a), RAnn(b))),
        compose_all(RAnn(_p(a, b)), AssocMul(a, b, Zero())),
    )


def _axiom_xix(a, b) -> Sides:
    ab = _p(a, b)
    return (
        compose_all(UnitLAdd(ab), MSum(RAnn(a), Id(ab)), DeltaL(a, Zero(), b)),
        MProd(Id(a), UnitLAdd(b)),
    )


def _axiom_xx(a, b) -> Sides:
    ba = _p(b, a)
    return (
        compose_all(UnitLAdd(ba), MSum(LAnn(a), Id(ba)), DeltaR(Zero(), b, a)),
        MProd(UnitLAdd(b), Id(a)),
    )


def _axiom_xxi(a, b) -> Sides:
    ab = _p(a, b)
    return (
        compose_all(UnitRAdd(ab), MSum(Id(ab), RAnn(a)), DeltaL(a, b, Zero())),
        MProd(Id(a), UnitRAdd(b)),
    )


def _axiom_xxii(a, b) -> Sides:
    ab = _p(a, b)
    return (
        compose_all(UnitRAdd(ab), MSum(Id(ab), LAnn(b)), DeltaR(a, Zero(), b)),
        MProd(UnitRAdd(a), Id(b)),
    )


def _axiom_xxiii(a, b) -> Sides:
    return (
        compose_all(MSum(UnitLMul(a), UnitLMul(b)), DeltaL(One(), a, b)),
        UnitLMul(_s(a, b)),
    )


def _axiom_xxiv(a, b) -> Sides:
    return (
        compose_all(MSum(UnitRMul(a), UnitRMul(b)), DeltaR(a, b, One())),
        UnitRMul(_s(a, b)),
    )


_BUILDERS: Dict[AxiomId, Callable[..., Sides]] = {
    AxiomId.I: _axiom_i,
    AxiomId.III: _axiom_iii,
    AxiomId.IV: _axiom_iv,
    AxiomId.V: _axiom_v,
    AxiomId.VI: _axiom_vi,
    AxiomId.VII: _axiom_vii,
    AxiomId.VIII: _axiom_viii,
    AxiomId.IX: _axiom_ix,
    AxiomId.X: _axiom_x,
    AxiomId.XI: _axiom_xi,
    AxiomId.XII: _axiom_xii,
    AxiomId.XIII: _axiom_xiii,
    AxiomId.XIV: _axiom_xiv,
    AxiomId.XVI: _axiom_xvi,
    AxiomId.XVII: _axiom_xvii,
    AxiomId.XVIII: _axiom_xviii,
    AxiomId.XIX: _axiom_xix,
    AxiomId.XX: _axiom_xx,
    AxiomId.XXI: _axiom_xxi,
    AxiomId.XXII: _axiom_xxii,
    AxiomId.XXIII: _axiom_xxiii,
    AxiomId.XXIV: _axiom_xxiv,
}

ARITY: Dict[AxiomId, int] = {axiom: builder.__code__.co_argcount for axiom, builder in _BUILDERS.items()}


def axiom_sides(axiom: AxiomId, objects: Sequence[ObjExpr]) -> Sides:
    """
    The two paths of an axiom, instantiated at ``objects``.

    Raises:
        AxiomArityError: If the number of objects does not match the axiom
    """
    axiom = AxiomId(axiom)
    expected = ARITY[axiom]
    if len(objects) != expected:
        raise AxiomArityError(axiom.value, expected, len(objects))
    return _BUILDERS[axiom](*objects)
