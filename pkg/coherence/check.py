"""
Instance checks of the coherence axioms and of coherence for regular
objects.

Structural morphisms compile to diagrams made of swaps only, so two
parallel structural morphisms are equal exactly when they induce the same
permutation of summands.
"""
from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from algebra.compiler import compile_morphism
from coherence.axioms import ARITY, AxiomId, axiom_sides
from coherence.errors import CoherenceError, NonStructuralMorphism, RegularityError
from diagram.validate import TypedDiagram
from equiv.permutation import Permutation, swap_permutation
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
    format_morexpr,
    infer_type,
    is_structural,
)
from expr.objects import (
    Gen,
    NormalForm,
    ObjExpr,
    One,
    Prod,
    Sum,
    Zero,
    format_normal_form,
    generators_of,
    is_regular,
    normalize,
    product_of,
    sum_of,
)
from semantics.evaluate import eval_diagram
from semantics.model import random_model
from signature.model import EMPTY_SIGNATURE, NormalizedSignature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoherenceCheck:
    """Outcome of comparing two parallel structural morphisms."""

    holds: bool
    dom: NormalForm
    cod: NormalForm
    left: Permutation
    right: Permutation
    left_expr: MorExpr
    right_expr: MorExpr

    def __bool__(self) -> bool:
        return self.holds


def _objects_of(objects: Sequence[ObjExpr]) -> Tuple[str, ...]:
    names = set()
    for obj in objects:
        names |= generators_of(obj)
    return tuple(sorted(names))


def _tables_agree(t1: TypedDiagram, t2: TypedDiagram, names: Tuple[str, ...], seed: int) -> bool:
    model = random_model(NormalizedSignature(objects=names), seed)
    return eval_diagram(t1, model) == eval_diagram(t2, model)


def _compare(
    left: MorExpr, right: MorExpr, names: Tuple[str, ...], sig: NormalizedSignature, seed: int
) -> CoherenceCheck:
    t1 = compile_morphism(left, sig)
    t2 = compile_morphism(right, sig)
    p1, p2 = swap_permutation(t1), swap_permutation(t2)
    holds = t1.dom == t2.dom and t1.cod == t2.cod and p1 == p2
    if holds and not _tables_agree(t1, t2, names, seed):
        logger.warning("Permutations agree but evaluation differs for %s", format_morexpr(left))
        holds = False
    return CoherenceCheck(holds, t1.dom, t1.cod, p1, p2, left, right)


def check_axiom(
    axiom: AxiomId,
    objects: Sequence[ObjExpr],
    sig: NormalizedSignature = EMPTY_SIGNATURE,
    seed: int = 0,
) -> CoherenceCheck:
    """
    Compile both sides of an axiom at the given objects and compare them.

    Args:
        axiom: Which axiom
        objects: Its object arguments
        sig: Signature the objects live over
        seed: Seed of the model used for the evaluation cross-check

    Raises:
        AxiomArityError: If the number of objects does not fit the axiom
        MorphismTypeError: If a side does not typecheck
    """
    left, right = axiom_sides(axiom, objects)
    result = _compare(left, right, _objects_of(objects), sig, seed)
    logger.debug("Axiom (%s) at %d objects: %s", AxiomId(axiom).value, len(objects), result.holds)
    return result


def check_regular_coherence(
    a: ObjExpr,
    b: ObjExpr,
    f: MorExpr,
    g: MorExpr,
    sig: NormalizedSignature = EMPTY_SIGNATURE,
    seed: int = 0,
) -> CoherenceCheck:
    """
    Compare two structural morphisms ``a -> b``.  For a regular ``a`` they
    must agree; a failing check is a counterexample.

    Raises:
        RegularityError: If ``a`` is not regular
        NonStructuralMorphism: If ``f`` or ``g`` uses a morphism generator
        CoherenceError: If ``f`` or ``g`` is not typed ``a -> b``
    """
    nf = normalize(a)
    if not is_regular(nf):
        raise RegularityError(f"{format_normal_form(nf)} is not regular")
    for m in (f, g):
        if not is_structural(m):
            raise NonStructuralMorphism(f"{format_morexpr(m)} is not built from structural isomorphisms")
        dom, cod = infer_type(m, sig.morphisms)
        if normalize(dom) != nf or normalize(cod) != normalize(b):
            raise CoherenceError(f"{format_morexpr(m)} is not a morphism between the given objects")
    return _compare(f, g, _objects_of([a, b]), sig, seed)


def _rewrites(e: ObjExpr) -> Iterator[Tuple[ObjExpr, MorExpr]]:
    """One structural step at the root of ``e``, without introducing units."""
    if isinstance(e, Sum):
        x, y = e.left, e.right
        yield Sum(y, x), Sym(x, y)
        if isinstance(y, Sum):
            yield Sum(Sum(x, y.left), y.right), AssocAdd(x, y.left, y.right)
        if isinstance(x, Sum):
            yield Sum(x.left, Sum(x.right, y)), Inverse(AssocAdd(x.left, x.right, y))
        if isinstance(x, Zero):
            yield y, UnitLAdd(y)
        if isinstance(y, Zero):
            yield x, UnitRAdd(x)
        if isinstance(x, Prod) and isinstance(y, Prod):
            if x.left == y.left:
                yield Prod(x.left, Sum(x.right, y.right)), Inverse(DeltaL(x.left, x.right, y.right))
            if x.right == y.right:
                yield Prod(Sum(x.left, y.left), x.right), Inverse(DeltaR(x.left, y.left, x.right))
    elif isinstance(e, Prod):
        x, y = e.left, e.right
        if isinstance(y, Sum):
            yield Sum(Prod(x, y.left), Prod(x, y.right)), DeltaL(x, y.left, y.right)
        if isinstance(x, Sum):
            yield Sum(Prod(x.left, y), Prod(x.right, y)), DeltaR(x.left, x.right, y)
        if isinstance(x, Zero):
            yield Zero(), LAnn(y)
        if isinstance(y, Zero):
            yield Zero(), RAnn(x)
        if isinstance(y, Prod):
            yield Prod(Prod(x, y.left), y.right), AssocMul(x, y.left, y.right)
        if isinstance(x, Prod):
            yield Prod(x.left, Prod(x.right, y)), Inverse(AssocMul(x.left, x.right, y))
        if isinstance(x, One):
            yield y, UnitLMul(y)
        if isinstance(y, One):
            yield x, UnitRMul(x)


def structural_steps(e: ObjExpr) -> Iterator[Tuple[ObjExpr, MorExpr]]:
    """Every single structural step from ``e``, at any subterm, as (target, morphism)."""
    yield from _rewrites(e)
    if isinstance(e, (Sum, Prod)):
        wrap = MSum if isinstance(e, Sum) else MProd
        for target, m in structural_steps(e.left):
            yield type(e)(target, e.right), wrap(m, Id(e.right))
        for target, m in structural_steps(e.right):
            yield type(e)(e.left, target), wrap(Id(e.left), m)


def structural_paths(e: ObjExpr, depth: int, limit: Optional[int] = None) -> List[Tuple[ObjExpr, MorExpr]]:
    """
    All composites of at most ``depth`` structural steps starting at ``e``,
    the empty one included, as (target, morphism) pairs.
    """
    paths: List[Tuple[ObjExpr, MorExpr]] = [(e, Id(e))]
    queue = deque([(e, Id(e), 0)])
    while queue:
        current, m, steps = queue.popleft()
        if steps == depth:
            continue
        for target, step in structural_steps(current):
            path = step if steps == 0 else compose_all(step, m)
            paths.append((target, path))
            if limit is not None and len(paths) >= limit:
                return paths
            queue.append((target, path, steps + 1))
    return paths


def random_regular_object(
    rng: np.random.Generator, names: Iterator[str], max_terms: int = 3, max_length: int = 3
) -> ObjExpr:
    """A sum of up to ``max_terms`` products of up to ``max_length`` fresh generators."""
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        length = int(rng.integers(1, max_length + 1))
        terms.append(product_of(Gen(next(names)) for _ in range(length)))
    return sum_of(terms)


def random_instance(axiom: AxiomId, rng: np.random.Generator) -> List[ObjExpr]:
    names = (f"X{k}" for k in range(10_000))
    return [random_regular_object(rng, names) for _ in range(ARITY[AxiomId(axiom)])]


def check_axiom_trials(
    axiom: AxiomId, trials: int, seed: int = 0, sig: NormalizedSignature = EMPTY_SIGNATURE
) -> Tuple[int, Optional[List[ObjExpr]]]:
    """
    Check an axiom at ``trials`` random instantiations with distinct generators.

    Returns:
        (passed, counterexample): the number of passing trials and the
        objects of the first failing one, if any
    """
    rng = np.random.default_rng(seed)
    for trial in range(trials):
        objects = random_instance(axiom, rng)
        if not check_axiom(axiom, objects, sig, seed + trial):
            return trial, objects
    return trials, None
