"""
Object expressions over a set of generators and their sum-of-products
normal forms.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Tuple, Union

from expr.errors import ExprError


Word = Tuple[str, ...]
NormalForm = Tuple[Word, ...]

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
RESERVED = frozenset({"O", "I"})

ZERO_NF: NormalForm = ()
ONE_NF: NormalForm = ((),)


def check_identifier(name: str) -> str:
    if not IDENTIFIER.match(name):
        raise ExprError(f"Invalid generator name {name!r}: expected [A-Za-z][A-Za-z0-9_]*")
    if name in RESERVED:
        raise ExprError(f"Generator name {name!r} is reserved")
    return name


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class Gen:
    name: str

    def __post_init__(self) -> None:
        check_identifier(self.name)


@dataclass(frozen=True)
class Sum:
    left: "ObjExpr"
    right: "ObjExpr"


@dataclass(frozen=True)
class Prod:
    left: "ObjExpr"
    right: "ObjExpr"


ObjExpr = Union[Zero, One, Gen, Sum, Prod]


def nf_product(a: NormalForm, b: NormalForm) -> NormalForm:
    """Left-major pairwise concatenation of the summands of two normal forms."""
    return tuple(x + y for x in a for y in b)


def normalize(e: ObjExpr) -> NormalForm:
    """
    Compute the sum-of-products normal form of an object expression.

    Args:
        e: Any object expression

    Returns:
        The ordered list of summands, each an ordered list of generator names
    """
    if isinstance(e, Zero):
        return ZERO_NF
    if isinstance(e, One):
        return ONE_NF
    if isinstance(e, Gen):
        return ((e.name,),)
    if isinstance(e, Sum):
        return normalize(e.left) + normalize(e.right)
    if isinstance(e, Prod):
        return nf_product(normalize(e.left), normalize(e.right))
    raise ExprError(f"Not an object expression: {e!r}")


def is_regular(n: NormalForm) -> bool:
    """True when summands are pairwise distinct and each is a product of distinct generators."""
    if len(set(n)) != len(n):
        return False
    return all(len(set(word)) == len(word) for word in n)


def sum_of(terms: Iterable[ObjExpr]) -> ObjExpr:
    """Right-associated sum; the empty sum is O."""
    items = list(terms)
    if not items:
        return Zero()
    return reduce(lambda acc, item: Sum(item, acc), reversed(items[:-1]), items[-1])


def left_sum_of(terms: Iterable[ObjExpr]) -> ObjExpr:
    """Left-associated sum; the empty sum is O."""
    items = list(terms)
    if not items:
        return Zero()
    return reduce(Sum, items[1:], items[0])


def product_of(terms: Iterable[ObjExpr]) -> ObjExpr:
    """Right-associated product; the empty product is I."""
    items = list(terms)
    if not items:
        return One()
    return reduce(lambda acc, item: Prod(item, acc), reversed(items[:-1]), items[-1])


def embed_word(word: Word) -> ObjExpr:
    return product_of(Gen(x) for x in word)


def embed(n: NormalForm) -> ObjExpr:
    """Re-embed a normal form as an expression, right-associating sums and products."""
    return sum_of(embed_word(word) for word in n)


def generators_of(e: ObjExpr) -> frozenset[str]:
    if isinstance(e, Gen):
        return frozenset({e.name})
    if isinstance(e, (Sum, Prod)):
        return generators_of(e.left) | generators_of(e.right)
    return frozenset()


def format_word(word: Word) -> str:
    return "*".join(word) if word else "I"


def format_normal_form(n: NormalForm) -> str:
    """Render a normal form in the expression grammar, e.g. ``A*C + A*D``."""
    if not n:
        return "O"
    return " + ".join(format_word(word) for word in n)


def format_objexpr(e: ObjExpr) -> str:
    """Render an expression with the minimal parentheses the grammar needs."""
    if isinstance(e, Zero):
        return "O"
    if isinstance(e, One):
        return "I"
    if isinstance(e, Gen):
        return e.name
    if isinstance(e, Sum):
        right = format_objexpr(e.right)
        if isinstance(e.right, Sum):
            right = f"({right})"
        return f"{format_objexpr(e.left)} + {right}"
    if isinstance(e, Prod):
        left = format_objexpr(e.left)
        right = format_objexpr(e.right)
        if isinstance(e.left, Sum):
            left = f"({left})"
        if isinstance(e.right, (Sum, Prod)):
            right = f"({right})"
        return f"{left}*{right}"
    raise ExprError(f"Not an object expression: {e!r}")
