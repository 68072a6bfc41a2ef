"""
Command-line interface: compile, combine, compare, evaluate and draw sheet
diagrams.

Exit status is 0 on success (or an equivalence), 1 on invalid input or a
negative answer, and 2 when the equivalence search runs out of budget.
"""
import functools
import logging
import sys
from pathlib import Path
from typing import Callable, Optional

import click

from algebra.compiler import compile_morphism
from algebra.errors import AlgebraError
from algebra.operations import compose, sum_diagrams, tensor
from coherence.axioms import ARITY, AxiomId
from coherence.check import check_axiom, check_axiom_trials
from coherence.errors import CoherenceError
from diagram.errors import DiagramError
from diagram.io import load_diagram, serialize_diagram
from diagram.skeleton import format_skeleton, skeleton
from diagram.validate import TypedDiagram, validate
from equiv.errors import EquivError
from equiv.moves import explode_maximally, format_move
from equiv.permutation import permutation_of
from equiv.search import Distinct, Equivalent, decide_equiv, format_verdict
from expr.errors import ExprError
from expr.morphisms import format_morexpr, normalization_morphism
from expr.objects import format_normal_form, is_regular, normalize
from expr.parser import parse_morexpr, parse_objexpr, parse_object_list
from render.layout import Style
from render.svg import render_svg
from semantics.errors import SemanticsError
from semantics.evaluate import eval_diagram, eval_element
from semantics.io import format_element, load_model, parse_element
from signature.errors import SignatureError
from signature.io import load_signature
from signature.model import EMPTY_SIGNATURE, NormalizedSignature
from utils import format_permutation, parse_pair
from utils.config import LOG_LEVELS, Settings
from utils.logging import configure_logging

logger = logging.getLogger(__name__)

HANDLED_ERRORS = (
    ExprError,
    SignatureError,
    DiagramError,
    AlgebraError,
    EquivError,
    SemanticsError,
    CoherenceError,
)

EXISTING = click.Path(exists=True, dir_okay=False, path_type=Path)


def reports_errors(command: Callable) -> Callable:
    """Turn library errors into a one-line message and exit status 1."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except HANDLED_ERRORS as e:
            raise click.ClickException(str(e)) from e

    return wrapper


def _signature(path: Optional[Path]) -> NormalizedSignature:
    return load_signature(path) if path is not None else EMPTY_SIGNATURE


def _typed(path: Path, sig: NormalizedSignature) -> TypedDiagram:
    return validate(load_diagram(path), sig)


def _emit(text: str, output: Optional[Path]) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        click.echo(f"Wrote {output}", err=True)


sig_option = click.option("--sig", "sig_path", type=EXISTING, default=None, help="Signature file (default: empty)")
out_option = click.option("-o", "--output", type=click.Path(dir_okay=False, path_type=Path), default=None)


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(LOG_LEVELS, case_sensitive=False),
    default=None,
    help="Overrides SHEETS_LOG_LEVEL",
)
@click.pass_context
def cli(ctx: click.Context, log_level: Optional[str]) -> None:
    """Sheet diagrams for bimonoidal categories."""
    try:
        settings = Settings.from_env()
    except ValueError as e:
        raise click.ClickException(str(e)) from e
    configure_logging(log_level or settings.log_level)
    ctx.obj = settings


@cli.command("validate")
@click.argument("diagram", type=EXISTING)
@sig_option
@reports_errors
def validate_command(diagram: Path, sig_path: Optional[Path]) -> None:
    """Type a diagram against a signature and print its boundaries."""
    t = _typed(diagram, _signature(sig_path))
    click.echo(f"valid: {format_normal_form(t.dom)} -> {format_normal_form(t.cod)}")
    click.echo(f"slices: {len(t.slices)}, nodes: {t.diagram.node_count}")


@cli.command("compile")
@click.argument("expression")
@sig_option
@out_option
@reports_errors
def compile_command(expression: str, sig_path: Optional[Path], output: Optional[Path]) -> None:
    """Compile a morphism expression such as 'f ; id(C)*g' to a diagram."""
    t = compile_morphism(parse_morexpr(expression), _signature(sig_path))
    _emit(serialize_diagram(t.diagram), output)


def _binary(name: str, operation: Callable[[TypedDiagram, TypedDiagram], TypedDiagram], summary: str) -> None:
    @cli.command(name, help=summary)
    @click.argument("first", type=EXISTING)
    @click.argument("second", type=EXISTING)
    @sig_option
    @out_option
    @reports_errors
    def command(first: Path, second: Path, sig_path: Optional[Path], output: Optional[Path]) -> None:
        sig = _signature(sig_path)
        t = operation(_typed(first, sig), _typed(second, sig))
        _emit(serialize_diagram(t.diagram), output)


_binary("compose", compose, "Stack SECOND on top of FIRST.")
_binary("sum", sum_diagrams, "Place SECOND to the right of FIRST.")
_binary("tensor", tensor, "Tensor product of FIRST and SECOND.")


@cli.command("normalize")
@click.option("--expr", "expression", required=True, help="Object expression, e.g. '(A+B)*(C+D)'")
@reports_errors
def normalize_command(expression: str) -> None:
    """Print the normal form of an object expression and its normalization morphism."""
    e = parse_objexpr(expression)
    nf = normalize(e)
    click.echo(f"normal form: {format_normal_form(nf)}")
    click.echo(f"regular: {'yes' if is_regular(nf) else 'no'}")
    click.echo(f"normalization: {format_morexpr(normalization_morphism(e))}")


@cli.command("equiv")
@click.argument("first", type=EXISTING)
@click.argument("second", type=EXISTING)
@sig_option
@click.option("--budget", type=int, default=None, help="Canonical states to explore")
@click.option("--seed", type=int, default=None, help="Seed of the random models")
@click.option("--models", type=int, default=None, help="Random models tried before searching")
@click.pass_obj
@reports_errors
def equiv_command(
    settings: Settings,
    first: Path,
    second: Path,
    sig_path: Optional[Path],
    budget: Optional[int],
    seed: Optional[int],
    models: Optional[int],
) -> None:
    """Decide whether two diagrams are equivalent (exit 0), distinct (1) or unknown (2)."""
    sig = _signature(sig_path)
    verdict = decide_equiv(
        _typed(first, sig),
        _typed(second, sig),
        budget=budget if budget is not None else settings.budget,
        seed=seed if seed is not None else settings.seed,
        models=models if models is not None else settings.models,
        max_carrier=settings.max_carrier,
    )
    click.echo(format_verdict(verdict))
    if isinstance(verdict, Equivalent):
        return
    sys.exit(1 if isinstance(verdict, Distinct) else 2)


@cli.command("eval")
@click.argument("diagram", type=EXISTING)
@sig_option
@click.option("--model", "model_path", type=EXISTING, required=True, help="Model file")
@click.option("--input", "element", default=None, help="A single input element, e.g. '0:(a1,b0)'")
@reports_errors
def eval_command(diagram: Path, sig_path: Optional[Path], model_path: Path, element: Optional[str]) -> None:
    """Evaluate a diagram in a finite-set model."""
    sig = _signature(sig_path)
    t = _typed(diagram, sig)
    model = load_model(model_path, sig)
    if element is not None:
        click.echo(format_element(eval_element(t, parse_element(element), model)))
        return
    for e, out in eval_diagram(t, model).items():
        click.echo(f"{format_element(e)} -> {format_element(out)}")


@cli.command("coherence")
@click.argument("sig_path", type=EXISTING, required=False)
@click.option("--axiom", type=click.Choice([a.value for a in AxiomId]), default=None)
@click.option("--objects", default="", help="Comma-separated object expressions, e.g. 'A,B+C,D'")
@click.option("--all", "check_all", is_flag=True, help="Check every axiom at random instances")
@click.option("--trials", type=int, default=500)
@click.option("--seed", type=int, default=None)
@click.pass_obj
@reports_errors
def coherence_command(
    settings: Settings,
    sig_path: Optional[Path],
    axiom: Optional[str],
    objects: str,
    check_all: bool,
    trials: int,
    seed: Optional[int],
) -> None:
    """Check coherence axioms, one at given objects or all at random ones."""
    sig = _signature(sig_path)
    seed = seed if seed is not None else settings.seed
    if check_all:
        failed = False
        for a in AxiomId:
            passed, counterexample = check_axiom_trials(a, trials, seed, sig)
            click.echo(f"({a.value}): {passed}/{trials}")
            failed = failed or counterexample is not None
        if failed:
            sys.exit(1)
        return
    if axiom is None:
        raise click.UsageError("Give --axiom or --all")
    result = check_axiom(AxiomId(axiom), parse_object_list(objects), sig, seed)
    click.echo(f"({axiom}) with {ARITY[AxiomId(axiom)]} objects: {'holds' if result else 'FAILS'}")
    click.echo(f"  left:  {format_permutation(result.left)}")
    click.echo(f"  right: {format_permutation(result.right)}")
    if not result:
        sys.exit(1)


@cli.command("render")
@click.argument("diagram", type=EXISTING)
@sig_option
@out_option
@click.option("--skew", default=None, help="Depth-axis skew 'dx,dy'")
@click.option("--scale", type=float, default=None, help="Pixels per unit")
@click.pass_obj
@reports_errors
def render_command(
    settings: Settings,
    diagram: Path,
    sig_path: Optional[Path],
    output: Optional[Path],
    skew: Optional[str],
    scale: Optional[float],
) -> None:
    """Draw a diagram as SVG; with --sig it is typed first and fully labeled."""
    try:
        style = Style(
            skew=parse_pair(skew, "skew") if skew is not None else settings.skew,
            scale=scale if scale is not None else settings.scale,
        )
    except ValueError as e:
        raise click.BadParameter(str(e)) from e
    d = load_diagram(diagram)
    _emit(render_svg(validate(d, load_signature(sig_path)) if sig_path else d, style), output)


@cli.command("baez")
@click.argument("diagram", type=EXISTING)
@reports_errors
def baez_command(diagram: Path) -> None:
    """Print the permutation a diagram over the empty signature induces."""
    t = _typed(diagram, EMPTY_SIGNATURE)
    click.echo(format_permutation(permutation_of(t)))


@cli.command("skeleton")
@click.argument("diagram", type=EXISTING)
@sig_option
@reports_errors
def skeleton_command(diagram: Path, sig_path: Optional[Path]) -> None:
    """Print the skeleton of a diagram, one slice per line."""
    click.echo(format_skeleton(skeleton(_typed(diagram, _signature(sig_path)))))


@cli.command("explode")
@click.argument("diagram", type=EXISTING)
@sig_option
@out_option
@reports_errors
def explode_command(diagram: Path, sig_path: Optional[Path], output: Optional[Path]) -> None:
    """Split every seam into single-node seams."""
    t, moves = explode_maximally(_typed(diagram, _signature(sig_path)))
    for move in moves:
        click.echo(format_move(move), err=True)
    _emit(serialize_diagram(t.diagram), output)


if __name__ == "__main__":
    cli()
