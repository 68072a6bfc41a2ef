import itertools
from collections import defaultdict
from typing import List

import pytest

from algebra.compiler import compile_morphism
from coherence.axioms import ARITY, AxiomId, axiom_sides
from coherence.check import check_axiom, check_axiom_trials, check_regular_coherence, structural_paths
from coherence.errors import AxiomArityError, CoherenceError, NonStructuralMorphism, RegularityError
from equiv.permutation import swap_permutation
from expr.morphisms import Id, Inverse, MorGen, Sym, infer_type
from expr.objects import Gen, ObjExpr, Prod, Sum, format_objexpr, normalize
from signature.model import EMPTY_SIGNATURE

A, B, C = Gen("A"), Gen("B"), Gen("C")


@pytest.mark.parametrize("axiom", list(AxiomId))
def test_axiom_holds_at_random_regular_objects(axiom: AxiomId) -> None:
    assert check_axiom_trials(axiom, 10, seed=0) == (10, None)


def test_axiom_sides_are_parallel() -> None:
    for axiom in AxiomId:
        objects = [Gen(f"X{k}") for k in range(ARITY[axiom])]
        left, right = axiom_sides(axiom, objects)
        ld, lc = infer_type(left, {})
        rd, rc = infer_type(right, {})
        assert normalize(ld) == normalize(rd)
        assert normalize(lc) == normalize(rc)


def test_check_axiom() -> None:
    result = check_axiom(AxiomId.I, [A, B, C])
    assert result
    assert result.left == result.right
    assert result.dom == (("A", "B"), ("A", "C"))
    assert check_axiom(AxiomId.X, [])


def test_axiom_arity() -> None:
    assert ARITY[AxiomId.IX] == 4
    assert ARITY[AxiomId.XIII] == 0
    with pytest.raises(AxiomArityError) as info:
        check_axiom(AxiomId.I, [A, B])
    assert (info.value.expected, info.value.got) == (3, 2)


def test_regular_coherence() -> None:
    result = check_regular_coherence(Sum(A, B), Sum(B, A), Sym(A, B), Inverse(Sym(B, A)))
    assert result
    assert result.left == result.right == (1, 0)


def test_regular_coherence_refuses_bad_input() -> None:
    with pytest.raises(RegularityError):
        check_regular_coherence(Sum(A, A), Sum(A, A), Sym(A, A), Id(Sum(A, A)))
    with pytest.raises(NonStructuralMorphism):
        check_regular_coherence(A, B, MorGen("f"), MorGen("f"))
    with pytest.raises(CoherenceError):
        check_regular_coherence(Sum(A, B), Sum(A, B), Sym(A, B), Id(Sum(A, B)))


def test_symmetry_on_a_repeated_summand_is_not_the_identity() -> None:
    # A + A is not regular: the two morphisms differ
    swap = compile_morphism(Sym(A, A), EMPTY_SIGNATURE)
    ident = compile_morphism(Id(Sum(A, A)), EMPTY_SIGNATURE)
    assert swap.dom == ident.dom and swap.cod == ident.cod
    assert swap_permutation(swap) != swap_permutation(ident)


def test_structural_paths_commute_on_a_regular_object() -> None:
    e = Prod(Sum(A, B), C)
    paths = structural_paths(e, 2, limit=200)
    assert len(paths) > 1
    by_target = defaultdict(set)
    for target, m in paths:
        assert infer_type(m, {}) == (e, target)
        by_target[target].add(swap_permutation(compile_morphism(m, EMPTY_SIGNATURE)))
    assert all(len(perms) == 1 for perms in by_target.values())


def test_structural_paths_respect_the_limit() -> None:
    assert len(structural_paths(Prod(Sum(A, B), C), 3, limit=10)) == 10
    assert structural_paths(A, 2) == [(A, Id(A))]


@pytest.mark.slow
@pytest.mark.parametrize("axiom", list(AxiomId))
def test_axiom_holds_over_many_trials(axiom: AxiomId) -> None:
    assert check_axiom_trials(axiom, 500, seed=1) == (500, None)


def _trees(leaves: List[ObjExpr]) -> List[ObjExpr]:
    if len(leaves) == 1:
        return list(leaves)
    found = []
    for cut in range(1, len(leaves)):
        for left, right in itertools.product(_trees(leaves[:cut]), _trees(leaves[cut:])):
            found += [Sum(left, right), Prod(left, right)]
    return found


REGULAR_OBJECTS = [e for n in range(1, 5) for e in _trees([Gen(name) for name in "ABCD"[:n]])]


def test_regular_objects_cover_every_bracketing() -> None:
    assert len(REGULAR_OBJECTS) == 1 + 2 + 8 + 40


@pytest.mark.slow
@pytest.mark.parametrize("e", REGULAR_OBJECTS, ids=format_objexpr)
def test_every_structural_path_pair_commutes(e: ObjExpr) -> None:
    by_target = defaultdict(list)
    for target, m in structural_paths(e, 3):
        by_target[target].append(m)
    for target, paths in by_target.items():
        perms = {swap_permutation(compile_morphism(m, EMPTY_SIGNATURE)) for m in paths}
        assert len(perms) == 1
        if len(paths) > 1:
            assert check_regular_coherence(e, target, paths[0], paths[-1])
