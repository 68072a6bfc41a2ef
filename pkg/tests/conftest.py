from pathlib import Path
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pytest

from algebra.operations import compose, generator, identity, permute, sum_all
from diagram.io import parse_diagram
from diagram.model import SheetDiagram, Swap
from diagram.validate import TypedDiagram, validate
from expr.objects import Gen, NormalForm, ObjExpr, One, Prod, Sum, Zero
from signature.gamma import GammaGenerator, IdWord, MorName, gamma_cod, gamma_dom
from signature.io import parse_signature
from signature.model import EMPTY_SIGNATURE, NormalizedSignature, normalize_signature

GOLDEN = Path(__file__).parent / "golden"

MIXED_SIGNATURE = """\
objects: [A, B, C, D, E]
morphisms:
  f: { dom: "A + A*B", cod: "C" }
  g: { dom: "B*D", cod: "A + D" }
  c: { dom: "C", cod: "A + D" }
"""

UNARY_SIGNATURE = """\
objects: [A, B, C, D]
morphisms:
  f: { dom: "A", cod: "B" }
  g: { dom: "C", cod: "D" }
"""

SHEET_SIGNATURE = """\
objects: [X]
morphisms:
  k: { dom: "X", cod: "X + X" }
  h: { dom: "X*X + X*X", cod: "X + X" }
"""

# Two generators that split a sheet and join two sheets back.
LOOP_SIGNATURE = """\
objects: [A, B]
morphisms:
  f: { dom: "A", cod: "B + B" }
  g: { dom: "B + B", cod: "A" }
"""

LOOP_DOMAINS: Tuple[NormalForm, ...] = (
    (("A",),),
    (("A",), ("A",)),
    (("A", "A"),),
    (("A", "B"), ("A", "B")),
    (("B",), ("B",)),
    (("B", "A"), ("B", "A"), ("A",)),
)

# Unlabeled document with three input sheets and two seams.
SAMPLE = """\
inputs: [ 1, 2, 2 ]
slices:
- offset: 1
  inputs: 1
  outputs: 2
  nodes:
  - offset: 0
    inputs: [ 1 ]
    outputs: [ 1, 1 ]
- offset: 2
  inputs: 2
  outputs: 2
  nodes:
  - offset: 0
    inputs: [ 2, 2 ]
    outputs: [ 1, 1 ]
"""

SAMPLE_LABELED = """\
inputs: [ 1, 2, 2 ]
labels: [ [ X ], [ X, X ], [ X, X ] ]
slices:
- offset: 1
  inputs: 1
  outputs: 2
  nodes:
  - offset: 0
    inputs: [ 1 ]
    outputs: [ 1, 1 ]
    label: k
- offset: 2
  inputs: 2
  outputs: 2
  nodes:
  - offset: 0
    inputs: [ 2, 2 ]
    outputs: [ 1, 1 ]
    label: h
"""


def load(text: str) -> NormalizedSignature:
    return normalize_signature(parse_signature(text))


def gen(*factors: str) -> GammaGenerator:
    """``gen("f", "1:C", "g")`` is the generator [f, 1_C, g]."""
    parts = []
    for factor in factors:
        if factor.startswith("1:"):
            parts.append(IdWord(tuple(factor[2:])))
        else:
            parts.append(MorName(factor))
    return GammaGenerator(tuple(parts))


@pytest.fixture
def mixed_sig() -> NormalizedSignature:
    return load(MIXED_SIGNATURE)


@pytest.fixture
def unary_sig() -> NormalizedSignature:
    return load(UNARY_SIGNATURE)


@pytest.fixture
def sheet_sig() -> NormalizedSignature:
    return load(SHEET_SIGNATURE)


@pytest.fixture
def loop_sig() -> NormalizedSignature:
    return load(LOOP_SIGNATURE)


@pytest.fixture
def sample() -> SheetDiagram:
    return parse_diagram(SAMPLE)


@pytest.fixture
def sample_typed(sheet_sig) -> TypedDiagram:
    return validate(parse_diagram(SAMPLE_LABELED), sheet_sig)


@pytest.fixture
def fcg(mixed_sig) -> TypedDiagram:
    """The single seam carrying [f, 1_C, g]."""
    return generator(gen("f", "1:C", "g"), mixed_sig)


def random_swaps(rng: np.random.Generator, sheets: int, count: int) -> TypedDiagram:
    """A swap-only diagram over the empty signature on one-wire sheets."""
    words = [(f"S{k}",) for k in range(sheets)]
    slices = tuple(Swap(int(o)) for o in rng.integers(0, sheets - 1, size=count))
    return validate(SheetDiagram(tuple(words), slices), EMPTY_SIGNATURE)


def swap_of(words) -> TypedDiagram:
    return permute(words, [1, 0])


def random_objexpr(rng: np.random.Generator, depth: int = 3, names: Sequence[str] = ("A", "B", "C")) -> ObjExpr:
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.1:
            return Zero()
        if roll < 0.2:
            return One()
        return Gen(names[int(rng.integers(len(names)))])
    left = random_objexpr(rng, depth - 1, names)
    right = random_objexpr(rng, depth - 1, names)
    return Sum(left, right) if rng.random() < 0.5 else Prod(left, right)


def random_generator(rng: np.random.Generator, sig: NormalizedSignature, max_factors: int = 3) -> GammaGenerator:
    """Morphism factors and identity words of up to two object generators, in random order."""
    morphisms = sorted(sig.morphisms)
    factors = []
    for _ in range(int(rng.integers(1, max_factors + 1))):
        if morphisms and rng.random() < 0.6:
            factors.append(MorName(morphisms[int(rng.integers(len(morphisms)))]))
        else:
            picks = rng.integers(0, len(sig.objects), size=int(rng.integers(1, 3)))
            factors.append(IdWord(tuple(sig.objects[int(k)] for k in picks)))
    return GammaGenerator(tuple(factors))


def seam_placements(nf: NormalForm, sig: NormalizedSignature) -> List[Tuple[int, GammaGenerator]]:
    """
    Every generator with one or two nodes whose domain is a run of
    consecutive sheets of ``nf``, with the index of the first sheet.
    """
    found = []
    for j, word in enumerate(nf):
        sites = []
        for name in sorted(sig.morphisms):
            dom = sig.type_of(name).dom
            if not dom or not dom[0]:
                continue
            head = dom[0]
            for p in range(len(word) - len(head) + 1):
                if word[p : p + len(head)] == head:
                    sites.append((p, p + len(head), name))
        choices = [[s] for s in sites] + [[s, r] for s in sites for r in sites if s[1] <= r[0]]
        for chosen in choices:
            factors = []
            at = 0
            for start, end, name in chosen:
                if start > at:
                    factors.append(IdWord(word[at:start]))
                factors.append(MorName(name))
                at = end
            if at < len(word):
                factors.append(IdWord(word[at:]))
            g = GammaGenerator(tuple(factors))
            dom = gamma_dom(g, sig)
            if tuple(nf[j : j + len(dom)]) == dom:
                found.append((j, g))
    return found


def placed(nf: NormalForm, j: int, g: GammaGenerator, sig: NormalizedSignature) -> TypedDiagram:
    """The seam of ``g`` on sheets ``j, j+1, ...`` of ``nf``, identities elsewhere."""
    width = len(gamma_dom(g, sig))
    return sum_all([identity(nf[:j], sig), generator(g, sig), identity(nf[j + width :], sig)], sig)


def adjacent_swap(nf: NormalForm, k: int, sig: NormalizedSignature) -> TypedDiagram:
    order = list(range(len(nf)))
    order[k], order[k + 1] = k + 1, k
    return permute(nf, order, sig)


def random_layer(
    rng: np.random.Generator, nf: NormalForm, sig: NormalizedSignature, max_sheets: int = 6
) -> Optional[TypedDiagram]:
    """One random seam on ``nf`` keeping at most ``max_sheets`` sheets, or None if nothing fits."""
    options = [
        (j, g)
        for j, g in seam_placements(nf, sig)
        if len(nf) - len(gamma_dom(g, sig)) + len(gamma_cod(g, sig)) <= max_sheets
    ]
    if not options:
        return None
    j, g = options[int(rng.integers(len(options)))]
    return placed(nf, j, g, sig)


def random_diagram(
    rng: np.random.Generator,
    sig: NormalizedSignature,
    dom: NormalForm,
    layers: int,
    max_sheets: int = 6,
) -> TypedDiagram:
    """Up to ``layers`` random seams and swaps stacked on ``dom``."""
    t = identity(dom, sig)
    for _ in range(layers):
        can_swap = len(t.cod) >= 2
        step = None
        if not can_swap or rng.random() < 0.7:
            step = random_layer(rng, t.cod, sig, max_sheets)
        if step is None and can_swap:
            step = adjacent_swap(t.cod, int(rng.integers(len(t.cod) - 1)), sig)
        if step is None:
            break
        t = compose(t, step)
    return t


def random_domain(rng: np.random.Generator) -> NormalForm:
    return LOOP_DOMAINS[int(rng.integers(len(LOOP_DOMAINS)))]


def small_diagrams(sig: NormalizedSignature, domains: Sequence[NormalForm], layers: int) -> List[TypedDiagram]:
    """Every stack of at most ``layers`` seams and swaps on the given domains, identities included."""
    found: List[TypedDiagram] = []
    frontier = [identity(dom, sig) for dom in domains]
    for depth in range(layers + 1):
        found.extend(frontier)
        if depth == layers:
            break
        grown = []
        for t in frontier:
            for j, g in seam_placements(t.cod, sig):
                grown.append(compose(t, placed(t.cod, j, g, sig)))
            for k in range(len(t.cod) - 1):
                grown.append(compose(t, adjacent_swap(t.cod, k, sig)))
        frontier = grown
    return found
