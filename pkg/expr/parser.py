"""
PEG grammars for the object and morphism text forms.

Objects:    ``(A+B)*(C+D)``, ``O``, ``I``; ``+`` binds looser than ``*``,
            both left-associative.
Morphisms:  ``f ; g`` (diagrammatic order), ``m1 + m2``, ``m1 * m2``,
            ``id(A)``, ``sym(A,B)``, ``dl(A,B,C)``, ``dr(A,B,C)``,
            ``lann(A)``, ``rann(A)``, ``assoc(A,B,C)``, ``assocp(A,B,C)``,
            ``lunit(A)``, ``runit(A)``, ``lunitp(A)``, ``runitp(A)``,
            ``inv(m)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Any, Callable, List

from arpeggio import EOF, NoMatch, ParserPython, PTNodeVisitor, ZeroOrMore, visit_parse_tree
from arpeggio import RegExMatch as _

from expr.errors import ExprSyntaxError
from expr.morphisms import KEYWORD_CONSTRUCTORS, Compose, Id, Inverse, MorExpr, MorGen, MProd, MSum
from expr.objects import Gen, ObjExpr, One, Prod, Sum, Zero

_ARITY = {
    "sym": 2,
    "dl": 3,
    "dr": 3,
    "lann": 1,
    "rann": 1,
    "assoc": 3,
    "assocp": 3,
    "lunit": 1,
    "runit": 1,
    "lunitp": 1,
    "runitp": 1,
}

# longest first, so that "assocp" is not read as "assoc"
_KEYWORDS = "|".join(sorted(_ARITY, key=len, reverse=True))
_RESERVED = "|".join(["id", "inv", "O", "I", *sorted(_ARITY, key=len, reverse=True)])


# objects


def zero():
    return _(r"O\b")


def one():
    return _(r"I\b")


def obj_gen():
    return _(r"[A-Za-z][A-Za-z0-9_]*")


def obj_atom():
    return [("(", obj_sum, ")"), zero, one, obj_gen]


def obj_prod():
    return obj_atom, ZeroOrMore("*", obj_atom)


def obj_sum():
    return obj_prod, ZeroOrMore("+", obj_prod)


def objects():
    return obj_sum, EOF


def object_list():
    return obj_sum, ZeroOrMore(",", obj_sum), EOF


# morphisms


def keyword():
    return _(rf"(?:{_KEYWORDS})\b")


def generator():
    return _(rf"(?!(?:{_RESERVED})\b)[A-Za-z][A-Za-z0-9_]*")


def identity():
    return "id", "(", obj_sum, ")"


def inverse():
    return "inv", "(", mor_seq, ")"


def structural():
    return keyword, "(", obj_sum, ZeroOrMore(",", obj_sum), ")"


def mor_atom():
    return [("(", mor_seq, ")"), identity, inverse, structural, generator]


def mor_prod():
    return mor_atom, ZeroOrMore("*", mor_atom)


def mor_sum():
    return mor_prod, ZeroOrMore("+", mor_prod)


def mor_seq():
    return mor_sum, ZeroOrMore(";", mor_sum)


def morphism():
    return mor_seq, EOF


def _terms(children) -> List[Any]:
    """Subexpressions among a node's children; punctuation and EOF are strings."""
    return [c for c in children if not isinstance(c, str)]


def _fold(children, build: Callable[[Any, Any], Any]) -> Any:
    terms = _terms(children)
    result = terms[0]
    for term in terms[1:]:
        result = build(result, term)
    return result


class ExpressionBuilder(PTNodeVisitor):
    """Turns parse trees into ``ObjExpr`` and ``MorExpr`` values."""

    def __init__(self, text: str):
        super().__init__()
        self.text = text

    def visit_zero(self, node, children) -> ObjExpr:
        return Zero()

    def visit_one(self, node, children) -> ObjExpr:
        return One()

    def visit_obj_gen(self, node, children) -> ObjExpr:
        return Gen(node.value)

    def visit_obj_atom(self, node, children) -> ObjExpr:
        return _terms(children)[0]

    def visit_obj_prod(self, node, children) -> ObjExpr:
        return _fold(children, Prod)

    def visit_obj_sum(self, node, children) -> ObjExpr:
        return _fold(children, Sum)

    def visit_objects(self, node, children) -> ObjExpr:
        return _terms(children)[0]

    def visit_object_list(self, node, children) -> List[ObjExpr]:
        return _terms(children)

    def visit_keyword(self, node, children) -> str:
        return node.value

    def visit_generator(self, node, children) -> MorExpr:
        return MorGen(node.value)

    def visit_identity(self, node, children) -> MorExpr:
        return Id(_terms(children)[0])

    def visit_inverse(self, node, children) -> MorExpr:
        return Inverse(_terms(children)[0])

    def visit_structural(self, node, children) -> MorExpr:
        name, *rest = children
        args = _terms(rest)
        if len(args) != _ARITY[name]:
            raise ExprSyntaxError(
                f"{name} takes {_ARITY[name]} object arguments, got {len(args)}", self.text, node.position
            )
        return KEYWORD_CONSTRUCTORS[name](*args)

    def visit_mor_atom(self, node, children) -> MorExpr:
        return _terms(children)[0]

    def visit_mor_prod(self, node, children) -> MorExpr:
        return _fold(children, MProd)

    def visit_mor_sum(self, node, children) -> MorExpr:
        return _fold(children, MSum)

    def visit_mor_seq(self, node, children) -> MorExpr:
        return _fold(children, lambda first, then: Compose(then, first))

    def visit_morphism(self, node, children) -> MorExpr:
        return _terms(children)[0]


@lru_cache(maxsize=None)
def _parser(root: Callable) -> ParserPython:
    return ParserPython(root)


def _parse(root: Callable, text: str) -> Any:
    try:
        tree = _parser(root).parse(text)
    except NoMatch as e:
        raise ExprSyntaxError("Cannot parse expression", text, e.position) from e
    return visit_parse_tree(tree, ExpressionBuilder(text))


def parse_objexpr(text: str) -> ObjExpr:
    """Parse an object expression such as ``(A+B)*(C+D)``."""
    return _parse(objects, text)


def parse_morexpr(text: str) -> MorExpr:
    """Parse a morphism expression such as ``id(A)*sym(B,C) ; dl(A,C,B)``."""
    return _parse(morphism, text)


def parse_object_list(text: str) -> List[ObjExpr]:
    """Parse a comma-separated list of object expressions, e.g. ``A,B+C,D``."""
    if not text.strip():
        return []
    return _parse(object_list, text)
