import json
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skeincoulomb.cli import VerifyConfig, classical_samples, eval_command, main, run_verify
from skeincoulomb.parse import ParseError, parse_expr
from skeincoulomb.qdiff import V, V_INV, QDiffOp
from skeincoulomb.render import render
from skeincoulomb.report import CheckReport, Check
from skeincoulomb.skein import A, alpha, beta, gamma_expr, gamma_minus_one, skein_equal

# parser -----------------------------------------------------------------------


def test_parse_two_words():
    e = parse_expr("a*b - b*a")
    assert len(e.terms) == 2
    assert e == alpha * beta - beta * alpha


def test_parse_gamma_minus_one():
    assert parse_expr("(1/(A+1/A))*(a*b+b*a) - c") == gamma_minus_one()


def test_parse_gamma_macro_and_scalars():
    assert parse_expr("g(2)") == gamma_expr(2)
    assert parse_expr("g(-1)") == gamma_minus_one()
    assert parse_expr("A^-2*a") == alpha * A ** -2
    assert parse_expr("-b^2") == -(beta * beta)
    assert skein_equal(parse_expr("s*A*b"), beta)
    assert parse_expr("l") == parse_expr("t/q")


@pytest.mark.parametrize("text,offset", [("a*(", 3), ("a b", 2), ("(a", 2), ("a+*b", 2), ("a % b", 2)])
def test_syntax_errors_report_offset(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.offset == offset


def test_unknown_identifier():
    with pytest.raises(ParseError, match="unknown identifier 'x'"):
        parse_expr("x + a")


def test_division_by_generator():
    with pytest.raises(ParseError, match="non-scalar"):
        parse_expr("a/b")


# rendering --------------------------------------------------------------------


def test_render_examples():
    assert eval_command("a", "torus1") == "w1^{1/2}w2^{-1/2} + w1^{-1/2}w2^{1/2}"
    assert eval_command("0") == "0"
    assert eval_command("0", "torus2") == "0"
    assert eval_command("b") == render(QDiffOp({1: V, -1: V_INV}))
    assert eval_command("b") == ("[(X^{2}t^{1/2} - t^{-1/2})/(X^{2} - 1)]·ϖ"
                                 " + [(X^{2}t^{-1/2} - t^{1/2})/(X^{2} - 1)]·ϖ^{-1}")
    assert eval_command("a") == "X + X^{-1}"
    assert eval_command("q*a - 1/2") == "Xq - 1/2 + X^{-1}q"


def test_render_is_injective_on_samples():
    texts = ["a", "b", "c", "a*b", "b*a", "g(2)", "q*a", "t*a"]
    rendered = {eval_command(t) for t in texts}
    assert len(rendered) == len(texts)


# reports ----------------------------------------------------------------------

statuses = st.sampled_from(["pass", "fail", "skip"])
texts = st.text(max_size=12)


@given(st.builds(CheckReport, texts, st.lists(st.builds(Check, texts, statuses, texts), max_size=5),
                 st.integers(0, 10 ** 6)))
def test_json_round_trip_byte_identical(report):
    once = report.to_json()
    assert CheckReport.from_json(once).to_json() == once


def test_suite_passes_iff_no_failures():
    r = CheckReport("x")
    r.add("a", True)
    r.add("b", None)
    assert r.passed
    r.add("c", False)
    assert not r.passed


# verify ------------------------------------------------------------------------


def test_skein_suite_has_four_presentation_checks():
    report = run_verify(VerifyConfig(suites=("skein",)))
    pres = [c for c in report.checks if c.name.startswith("skein/presentation/")]
    assert len(pres) == 4 and all(c.status == "pass" for c in pres)
    assert report.passed


def test_coulomb_suite():
    report = run_verify(VerifyConfig(suites=("coulomb",), k_max=4))
    assert report.passed
    names = [c.name for c in report.checks]
    assert any("P_" in n for n in names)
    assert any("realizations" in n for n in names)


def test_classical_samples_cover_ten_points():
    samples = classical_samples(7, 12)
    assert sum(len(xs) for _, xs in samples) >= 10
    assert samples == classical_samples(7, 12)


def test_determinism_modulo_timing():
    cfg = VerifyConfig(suites=("skein", "classical"), seed=11)

    def strip(r):
        d = r.to_dict()
        d.pop("elapsed_ms")
        return d

    assert strip(run_verify(cfg)) == strip(run_verify(cfg))


def test_config_validation():
    with pytest.raises(ValueError):
        VerifyConfig(max_word_len=0)
    with pytest.raises(ValueError):
        VerifyConfig(suites=("nope",))


def test_main_exit_codes(capsys):
    assert main(["verify", "--suite", "skein", "--report", "json"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["suite"] == "skein"
    assert main(["verify", "--suite", "skein", "--debug-corrupt"]) == 1
    assert main(["eval", "a*("]) == 2
    assert "offset 3" in capsys.readouterr().err


def test_corrupted_all_suites_fail(tmp_path):
    out = tmp_path / "report.json"
    code = main(["verify", "--suite", "all", "--debug-corrupt", "--report", "json", "--out", str(out)])
    assert code != 0
    report = CheckReport.from_json(out.read_text())
    assert report.failures()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "skeincoulomb", "eval", "--target", "torus1", "a"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "w1^{1/2}w2^{-1/2} + w1^{-1/2}w2^{1/2}"
