import io
import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys
from nal.freealgebra import associator, jacobian, variables
from nal.frontend.algebra_doc import DocumentError, builtin_algebra, dump_algebra, parse_algebra
from nal.frontend.cli import run
from nal.frontend.parser import Call, ParseError, Prod, Var, parse, parse_expression, parse_vector_expression

a, b, c = variables("a b c")


# ---------------------------------------------------------------- parser

def test_builtins_expand():
    assert parse_expression("T(a,b,c)") == (a * b) * c - a * (b * c) + b * (a * c)
    assert parse_expression("J(a,b,c)") == jacobian(a, b, c)
    assert parse_expression("A(a,b,c)") == associator(a, b, c)
    assert parse_expression("(a*b)*c - a*(b*c)") == associator(a, b, c)


def test_scalars_signs_and_zero():
    assert parse_expression("-2*a + 1/3*(a*b)") == a.scale(-2) + (a * b).scale(Fraction(1, 3))
    assert parse_expression("+a - a") == parse_expression("0")
    assert not parse_expression("0")


def test_ast_shape():
    tree = parse("T(a, b*c, a)")
    assert isinstance(tree, Call) and tree.name == "T"
    assert tree.args[1] == Prod(Var("b"), Var("c"))


@pytest.mark.parametrize("text,col,fragment", [
    ("a*b*c", 4, "parenthesize"),
    ("(a*b)*c*a", 8, "parenthesize"),
    ("F(a,b,c)", 1, "unknown builtin"),
    ("T(a,b)", 6, "expected ','"),
    ("T(a,b,c,d)", 8, "3 arguments"),
    ("(a", 3, "expected ')'"),
    ("a $ b", 3, "unexpected character"),
    ("", 1, "empty"),
    ("3", 1, "scalar"),
    ("1/0*a", 1, "zero denominator"),
])
def test_syntax_errors_carry_positions(text, col, fragment):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.line == 1 and info.value.column == col
    assert fragment in info.value.message


def test_errors_on_later_lines():
    with pytest.raises(ParseError) as info:
        parse_expression("a +\n  b*c*a")
    assert (info.value.line, info.value.column) == (2, 6)


def test_eval_mode():
    A = builtin_algebra("A")
    assert str(parse_vector_expression("T(e1,e2,e4)", A)) == "-3*e3"
    with pytest.raises(ParseError, match="e9"):
        parse_vector_expression("e1*e9", A)


@given(polys())
def test_round_trip(p):
    assert parse_expression(str(p)) == p


@given(st.text(alphabet="ab()*+-,/0123456789TJA \n", max_size=30))
def test_parser_is_total(text):
    try:
        parse_expression(text)
    except ParseError:
        pass


# ---------------------------------------------------------------- documents

def test_shipped_documents():
    A = builtin_algebra("A")
    assert A.dim == 4 and str(A.basis("e3") * A.basis("e4")) == "-1*e3"
    C = builtin_algebra("C")
    assert str(C.basis("e1") * C.basis("e1")) == "1*e2"


def doc(**overrides):
    base = {"name": "T", "dim": 2, "basis": ["e1", "e2"], "products": [
        {"left": "e1", "right": "e1", "result": {"e2": "1/2"}}]}
    base.update(overrides)
    return json.dumps(base)


def test_document_round_trip():
    alg = parse_algebra(doc())
    assert parse_algebra(dump_algebra(alg)) == alg
    assert alg.basis("e1") * alg.basis("e1") == alg.element({"e2": Fraction(1, 2)})


@pytest.mark.parametrize("overrides,path", [
    ({"products": [{"left": "e1", "right": "e9", "result": {}}]}, "e9"),
    ({"products": [{"left": "e1", "right": "e1", "result": {"e9": 1}}]}, "e9"),
    ({"dim": 3}, "basis"),
    ({"basis": ["e1", "e1"]}, "basis"),
    ({"products": [{"left": "e1", "right": "e1", "result": {"e2": "x/2"}}]}, "products[0].result.e2"),
    ({"products": [{"left": "e1", "result": {}}]}, "products[0].right"),
    ({"extra": 1}, "extra"),
    ({"skew": "yes"}, "skew"),
])
def test_schema_errors_name_the_field(overrides, path):
    with pytest.raises(DocumentError) as info:
        parse_algebra(doc(**overrides))
    assert path in str(info.value)


def test_skew_completion_conflict():
    text = doc(skew=True, products=[{"left": "e1", "right": "e2", "result": {"e1": 1}},
                                    {"left": "e2", "right": "e1", "result": {"e1": 1}}])
    with pytest.raises(DocumentError):
        parse_algebra(text)


def test_invalid_json():
    with pytest.raises(DocumentError, match="invalid JSON"):
        parse_algebra("{")


# ---------------------------------------------------------------- cli

def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_cli_eval():
    assert cli("eval", "--algebra", "A.alg", "--expr", "T(e1,e2,e4)") == (0, "-3*e3\n")


def test_cli_check_failure_prints_witness():
    code, out = cli("check", "--algebra", "C", "--variety", "binary-leibniz")
    assert code == 1
    assert out.startswith("fails\nwitness: binary-leibniz: <a,b,a>")
    assert out.rstrip().endswith("= -1*e3")


def test_cli_check_identity():
    assert cli("check", "--algebra", "A", "--identity", "a*b + b*a") == (0, "holds\n")


def test_cli_member():
    code, out = cli("member", "--target", "T(a,b,c)+T(a,c,b)", "--variety", "binary-leibniz")
    assert code == 0 and out.startswith("member")
    code, out = cli("member", "--target", "a*b", "--variety", "leibniz")
    assert code == 1 and out.startswith("not a member")


def test_cli_member_with_axiom_file(tmp_path):
    f = tmp_path / "ax.txt"
    f.write_text("# left Leibniz\nT(a,b,c)\n")
    assert cli("member", "--target", "T(x,x,y)", "--axioms", str(f))[0] == 0
    f.write_text("T(a,b\n")
    assert cli("member", "--target", "a", "--axioms", str(f))[0] == 2


def test_cli_linearize_and_nf():
    code, out = cli("linearize", "--expr", "(x*x)*x", "--delta", "x", "--to", "x*x")
    assert code == 0 and out == "(x*x)*(x*x) + (x*(x*x))*x + ((x*x)*x)*x\n"
    code, out = cli("linearize", "--expr", "T(a,a,b)")
    assert code == 0 and out.startswith("{a:2,b:1}: ")
    assert cli("nf", "--expr", "(a*b)*c") == (0, "a*(b*c) - b*(a*c)\n")


def test_cli_enumerate():
    code, out = cli("enumerate", "--multidegree", "x=2,y=1")
    assert code == 0 and len(out.splitlines()) == 6
    assert cli("enumerate", "--multidegree", "x=4,y=3", "--count") == (0, "4620\n")


@pytest.mark.parametrize("argv", [
    ("eval", "--algebra", "A", "--expr", "e1*e2*e3"),
    ("eval", "--algebra", "missing.alg", "--expr", "e1"),
    ("check", "--algebra", "A", "--variety", "nonexistent"),
    ("enumerate", "--multidegree", "x="),
    ("bogus",),
    ("member", "--target", "a"),
    ("--threads", "0", "nf", "--expr", "a"),
])
def test_cli_usage_errors_exit_2(argv, capsys):
    assert run(list(argv), io.StringIO()) == 2


def test_cli_is_deterministic():
    args = ("check", "--algebra", "D", "--variety", "binary-lie")
    assert cli(*args) == cli(*args)


def test_cli_varieties_lists_provenance():
    code, out = cli("varieties")
    assert code == 0 and "external" in out and "binary-leibniz" in out


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "nal.frontend.cli", "eval", "--algebra", "D",
                           "--expr", "J(e1,e2,e1*e2)"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "-2*e3\n"
