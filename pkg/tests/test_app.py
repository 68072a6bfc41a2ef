import pytest
from click.testing import CliRunner

from app import cli
from diagram.io import serialize_diagram
from semantics.io import dump_model
from semantics.model import random_model
from signature.io import load_signature
from tests.conftest import SAMPLE, SAMPLE_LABELED, MIXED_SIGNATURE, SHEET_SIGNATURE

SWAP = "inputs: [ 1, 1 ]\nlabels: [ [ A ], [ B ] ]\nslices:\n- kind: swap\n  offset: 0\n"
IDENTITY = "inputs: [ 1, 1 ]\nlabels: [ [ A ], [ B ] ]\nslices: []\n"


@pytest.fixture
def files(tmp_path):
    texts = {
        "mixed.yaml": MIXED_SIGNATURE,
        "sheets.yaml": SHEET_SIGNATURE,
        "sample.yaml": SAMPLE,
        "labeled.yaml": SAMPLE_LABELED,
        "swap.yaml": SWAP,
        "identity.yaml": IDENTITY,
    }
    for name, text in texts.items():
        (tmp_path / name).write_text(text, encoding="utf-8")
    return tmp_path


def run(*args: str):
    return CliRunner().invoke(cli, [str(a) for a in args])


def test_validate(files) -> None:
    result = run("validate", files / "labeled.yaml", "--sig", files / "sheets.yaml")
    assert result.exit_code == 0, result.output
    assert "valid: X + X*X + X*X -> X + X*X + X + X" in result.output
    assert "nodes: 2" in result.output


def test_validate_reports_unlabeled_diagrams(files) -> None:
    result = run("validate", files / "sample.yaml", "--sig", files / "sheets.yaml")
    assert result.exit_code == 1
    assert "Error" in result.output


def test_compile(files) -> None:
    out = files / "f.yaml"
    result = run("compile", "f", "--sig", files / "mixed.yaml", "-o", out)
    assert result.exit_code == 0, result.output
    assert out.read_text(encoding="utf-8").startswith("inputs:")
    result = run("validate", out, "--sig", files / "mixed.yaml")
    assert "valid: A + A*B -> C" in result.output
    assert "nodes: 1" in result.output


def test_explode(files, fcg) -> None:
    path = files / "fcg.yaml"
    path.write_text(serialize_diagram(fcg.diagram), encoding="utf-8")
    result = run("explode", path, "--sig", files / "mixed.yaml")
    assert result.exit_code == 0, result.output
    assert "explode slice 0 before factor 1" in result.output


def test_compile_rejects_bad_expressions(files) -> None:
    result = run("compile", "f ; f", "--sig", files / "mixed.yaml")
    assert result.exit_code == 1


def test_normalize() -> None:
    result = run("normalize", "--expr", "(A+B)*(C+D)")
    assert result.exit_code == 0
    assert "normal form: A*C + A*D + B*C + B*D" in result.output
    assert "regular: yes" in result.output


def test_equiv_exit_codes(files) -> None:
    same = run("equiv", files / "swap.yaml", files / "swap.yaml")
    assert same.exit_code == 0
    assert same.output.startswith("equivalent")
    different = run("equiv", files / "swap.yaml", files / "identity.yaml")
    assert different.exit_code == 1
    assert different.output.startswith("distinct")


def test_binary_operations(files) -> None:
    result = run("sum", files / "swap.yaml", files / "identity.yaml")
    assert result.exit_code == 0
    assert "inputs: [ 1, 1, 1, 1 ]" in result.output
    result = run("compose", files / "swap.yaml", files / "identity.yaml")
    assert result.exit_code == 1


def test_baez(files) -> None:
    result = run("baez", files / "swap.yaml")
    assert result.exit_code == 0
    assert result.output.strip() == "0<-1 1<-0"


def test_coherence() -> None:
    result = run("coherence", "--axiom", "I", "--objects", "A,B,C")
    assert result.exit_code == 0, result.output
    assert "holds" in result.output
    assert run("coherence", "--axiom", "I", "--objects", "A").exit_code == 1
    assert run("coherence").exit_code == 2


def test_render(files) -> None:
    out = files / "sample.svg"
    result = run("render", files / "sample.yaml", "-o", out)
    assert result.exit_code == 0, result.output
    assert out.read_text(encoding="utf-8").startswith("<?xml")
    bad = run("render", files / "sample.yaml", "--skew", "1")
    assert bad.exit_code == 2


def test_skeleton(files) -> None:
    result = run("skeleton", files / "swap.yaml")
    assert result.exit_code == 0
    assert result.output.startswith("dom: A + B")
    assert "swap @0 A <-> B" in result.output


def test_eval(files) -> None:
    sig = load_signature(files / "sheets.yaml")
    model = files / "model.yaml"
    model.write_text(dump_model(random_model(sig, 0)), encoding="utf-8")
    result = run("eval", files / "labeled.yaml", "--sig", files / "sheets.yaml", "--model", model)
    assert result.exit_code == 0, result.output
    assert " -> " in result.output


def test_eval_rejects_inputs_outside_the_domain(files) -> None:
    model = files / "model.yaml"
    model.write_text("carriers:\n  A: [a0]\n  B: [b0]\ntables: {}\n", encoding="utf-8")
    result = run("eval", files / "swap.yaml", "--model", model, "--input", "7:(zz,yy)")
    assert result.exit_code == 1
    assert "summand 7" in result.output
    result = run("eval", files / "swap.yaml", "--model", model, "--input", "1:(b0)")
    assert result.exit_code == 0, result.output
    assert result.output.strip() == "0:(b0)"


def test_log_level_is_a_choice() -> None:
    assert run("--log-level", "debug", "normalize", "--expr", "A").exit_code == 0
    result = run("--log-level", "LOUD", "normalize", "--expr", "A")
    assert result.exit_code == 2
    assert "LOUD" in result.output


def test_invalid_log_level_in_environment(monkeypatch) -> None:
    monkeypatch.setenv("SHEETS_LOG_LEVEL", "LOUD")
    result = run("normalize", "--expr", "A")
    assert result.exit_code == 1
    assert "SHEETS_LOG_LEVEL" in result.output
