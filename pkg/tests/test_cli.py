"""Expression language and command-line interface."""

import json
import subprocess
import sys

import pytest

from binprod import (
    InvalidInput,
    NotAPowerSeries,
    ParseError,
    Poly,
    RatFun,
    binomial_product,
    hadamard_product,
    named_gf,
    run_identity_suite,
)
import binprod.cli as cli
from binprod.cli import (
    Add,
    BProd,
    Div,
    HProd,
    Mul,
    Neg,
    Num,
    Pow,
    Seq,
    Sub,
    Var,
    evaluate_text,
    main,
    parse_expression,
    to_text,
    tokenize,
)

FIB = named_gf("fib").gf
PELL = named_gf("pell").gf

# expressions exercising every operator, both unicode spellings, implicit
# multiplication, signed exponents, and sequence parameters
CORPUS = [
    "fib obprod pell",
    "x/(1 - x - x^2)",
    "(1 + x)^3/(1 - 2*x)",
    "-x + 2/3*x^3",
    "1/(1 - x)^2",
    "fib hprod (lucas + 1)",
    "g(1/2, -3) obprod trib(1, 0, 2)",
    "2*x^2 - 3*x^3",
    "(fib + lucas) hprod pell - x",
    "-(1 - x)^-1",
    "fib ⊙ pell",
    "fib ∗ pell",
    "2x^2 (1 + x)",
]


class TestTokenizer:
    def test_unicode_operators_become_keywords(self):
        toks = tokenize("fib ⊙ pell")
        assert [t.text for t in toks[:3]] == ["fib", "obprod", "pell"]
        toks = tokenize("fib ∗ pell")
        assert toks[1].text == "hprod"

    def test_positions_recorded(self):
        toks = tokenize("1 + xy")
        assert [(t.text, t.pos) for t in toks[:3]] == [("1", 0), ("+", 2), ("xy", 4)]

    def test_unexpected_character(self):
        with pytest.raises(ParseError) as exc:
            tokenize("1 + $")
        assert exc.value.position == 4
        assert "at position 4" in str(exc.value)


class TestParser:
    def test_product_operators_bind_loosest(self):
        got = parse_expression("fib obprod pell + x")
        assert got == BProd(Seq("fib"), Add(Seq("pell"), Var()))
        got = parse_expression("fib hprod pell * x")
        assert got == HProd(Seq("fib"), Mul(Seq("pell"), Var()))

    def test_left_associative_chains(self):
        got = parse_expression("fib obprod pell obprod lucas")
        assert got == BProd(BProd(Seq("fib"), Seq("pell")), Seq("lucas"))
        got = parse_expression("1 - x - x^2")
        assert got == Sub(Sub(Num(1), Var()), Pow(Var(), 2))

    def test_implicit_multiplication(self):
        assert parse_expression("2x^2") == Mul(Num(2), Pow(Var(), 2))
        assert parse_expression("x(1+x)") == Mul(Var(), Add(Num(1), Var()))
        assert parse_expression("2 fib") == Mul(Num(2), Seq("fib"))

    def test_unary_minus_and_signed_exponent(self):
        assert parse_expression("-x^2") == Neg(Pow(Var(), 2))
        assert parse_expression("(1-x)^-1") == Pow(Sub(Num(1), Var()), -1)

    def test_sequence_arguments(self):
        got = parse_expression("g(1/2, -3)")
        assert got == Seq("g", (Div(Num(1), Num(2)), Neg(Num(3))))

    def test_unclosed_parenthesis(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("1/(1-x")
        assert exc.value.position == 6
        assert ")" in "".join(exc.value.expected)

    def test_adjacent_numbers_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_expression("2 3")
        assert exc.value.position == 2

    def test_trailing_operator_rejected(self):
        with pytest.raises(ParseError):
            parse_expression("1 +")
        with pytest.raises(ParseError):
            parse_expression("fib obprod")


class TestPrinter:
    def test_round_trip_is_fixed_point(self):
        for text in CORPUS:
            once = to_text(parse_expression(text))
            twice = to_text(parse_expression(once))
            assert once == twice, text
            assert evaluate_text(text) == evaluate_text(once), text

    def test_parenthesization(self):
        assert to_text(parse_expression("(1+x)*(1-x)")) == "(1 + x)*(1 - x)"
        assert to_text(parse_expression("(1+x)^3")) == "(1 + x)^3"
        assert to_text(parse_expression("-(1+x)")) == "-(1 + x)"
        assert to_text(parse_expression("x - (1 - x)")) == "x - (1 - x)"


class TestEvaluation:
    def test_named_and_rational(self):
        assert evaluate_text("fib") == FIB
        assert evaluate_text("x/(1-x-x^2)") == FIB
        assert evaluate_text("(1-x)^-1") == RatFun(Poly.one(), Poly([1, -1]))

    def test_product_keywords_match_library(self):
        assert evaluate_text("fib obprod pell") == binomial_product(FIB, PELL)
        assert evaluate_text("fib ⊙ pell") == binomial_product(FIB, PELL)
        assert evaluate_text("fib hprod pell") == hadamard_product(FIB, PELL)
        assert evaluate_text("fib ∗ pell") == hadamard_product(FIB, PELL)

    def test_sequence_parameters_must_be_constants(self):
        with pytest.raises(InvalidInput):
            evaluate_text("g(x, 1)")

    def test_unknown_sequence(self):
        with pytest.raises(InvalidInput):
            evaluate_text("catalan")

    def test_not_a_power_series(self):
        with pytest.raises(NotAPowerSeries):
            evaluate_text("1/x")


class TestMainCommand:
    def test_eval_and_exit_codes(self, capsys):
        assert main(["eval", "fib"]) == 0
        assert capsys.readouterr().out.strip() == "(x) / (1 - x - x^2)"

        assert main(["eval", "1/(1-x"]) == 2
        err = capsys.readouterr().err
        assert err.startswith("parse error:") and "position" in err

        assert main(["eval", "1/x"]) == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_argparse_errors_return_2(self, capsys):
        assert main([]) == 2
        assert main(["bprod", "fib"]) == 2
        assert main(["frobnicate"]) == 2
        capsys.readouterr()

    def test_eval_json(self, capsys):
        assert main(["eval", "fib/2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"num": ["0", "1/2"], "den": ["1", "-1", "-1"]}

    def test_coeffs(self, capsys):
        assert main(["coeffs", "fib", "-n", "8"]) == 0
        out = capsys.readouterr().out.split()
        assert out == ["0", "1", "1", "2", "3", "5", "8", "13"]

        assert main(["coeffs", "fib", "--terms", "4", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"coeffs": ["0", "1", "1", "2"]}

        assert main(["coeffs", "fib", "-n", "-1"]) == 1
        capsys.readouterr()

    def test_bprod_every_method(self, capsys):
        want = "(2*x^2 - 3*x^3) / (1 - 6*x + 7*x^2 + 6*x^3 - 9*x^4)"
        for method in ("resultant", "symfun", "pfrac", "reconstruct"):
            rc = main(["bprod", "fib", "pell", "--method", method])
            assert rc == 0
            assert capsys.readouterr().out.strip() == want

    def test_cross_check_reports_agreement(self, capsys):
        assert main(["hprod", "fib", "pell", "--cross-check"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert len(lines) == 2
        assert lines[1] == "methods agree: resultant, symfun, pfrac, reconstruct"

    def test_denominator_both_kinds(self, capsys):
        assert main(["denominator", "fib", "pell", "--kind", "binomial"]) == 0
        assert capsys.readouterr().out.strip() == "1 - 6*x + 7*x^2 + 6*x^3 - 9*x^4"
        assert main(["denominator", "fib", "pell", "--kind", "hadamard", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {"den": ["1", "-2", "-7", "-2", "1"]}

    def test_reconstruct_round_trip(self, tmp_path, capsys):
        assert main(["coeffs", "fib hprod pell", "-n", "12"]) == 0
        coeffs = capsys.readouterr().out
        path = tmp_path / "series.txt"
        path.write_text(coeffs, encoding="utf-8")
        rc = main(
            ["reconstruct", "--coeffs", str(path), "--den-deg", "4", "--num-deg", "3"]
        )
        assert rc == 0
        want = capsys.readouterr().out.strip()
        main(["hprod", "fib", "pell"])
        assert capsys.readouterr().out.strip() == want

    def test_reconstruct_bad_file(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("1 2 oops", encoding="utf-8")
        rc = main(["reconstruct", "--coeffs", str(path), "--den-deg", "1", "--num-deg", "1"])
        assert rc == 1
        assert "oops" in capsys.readouterr().err

    def test_verify_pass(self, capsys):
        assert main(["verify", "--only", "a"]) == 0
        assert "[PASS] (a)" in capsys.readouterr().out

        assert main(["verify", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["passed"] is True
        assert [c["id"] for c in payload["checks"]] == list("abcdefghijkl")

    def test_verify_failure_exits_3(self, capsys, monkeypatch):
        wrong = RatFun(Poly([2, -2]), Poly([1, -1, -1]))

        def broken(only=None):
            return run_identity_suite(only=only, overrides={"lucas": wrong})

        monkeypatch.setattr(cli, "run_identity_suite", broken)
        assert main(["verify", "--only", "a"]) == 3
        assert "[FAIL] (a)" in capsys.readouterr().out

    def test_recurrence_human(self, capsys):
        assert main(["recurrence", "fib obprod pell"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == [
            "order: 4",
            "c(n) = 6*c(n-1) - 7*c(n-2) - 6*c(n-3) + 9*c(n-4) for n >= 4",
            "initial: 0, 0, 2, 9",
        ]

    def test_recurrence_polynomial(self, capsys):
        assert main(["recurrence", "x^2"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines == ["order: 0", "c(n) = 0 for n >= 3", "initial: 0, 0, 1"]

    def test_recurrence_json(self, capsys):
        assert main(["recurrence", "fib", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload == {
            "order": 2,
            "coefficients": ["1", "1"],
            "valid_from": 2,
            "initial": ["0", "1"],
        }

    def test_sequences_listing(self, capsys):
        assert main(["sequences"]) == 0
        out = capsys.readouterr().out
        for name in ("fib", "lucas", "pell", "trib", "perrin", "jacobsthal"):
            assert f"{name}:" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "binprod", "eval", "fib"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "(x) / (1 - x - x^2)"
