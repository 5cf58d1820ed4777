import json

import pytest

from nal.frontend.algebra_doc import builtin_algebra
from nal.frontend.cli import run
from nal.verify import (
    GOLDEN_MATRIX,
    Report,
    membership_matrix,
    verify_delta_minus_uy,
    verify_dialgebra_remarks,
    verify_examples,
    verify_inclusions,
    verify_lemma_ekel,
    verify_lemma_skew_and_eq13,
    verify_linearizations,
    verify_theorem_binary,
    verify_theorem_unary,
)


def corrupted_a():
    A = builtin_algebra("A")
    return A.with_product("e3", "e4", {"e3": 1}).with_product("e4", "e3", {"e3": -1})


def test_examples_pass():
    report = verify_examples()
    assert report.ok, report.to_text()


def test_corrupted_a_fails_the_malcev_item():
    report = verify_examples({"A": corrupted_a()})
    assert not report["A.malcev"].passed
    assert "witness" in report["A.malcev"].details
    assert report["B.leibniz"].passed


def test_mutated_c_breaks_di_malcev():
    C = builtin_algebra("C").with_product("e1", "e2", {"e2": 1})
    report = verify_dialgebra_remarks({"C": C})
    assert not report["dialgebra.C"].passed
    assert report["dialgebra.binary-lie"].passed


def test_text_report_is_deterministic():
    assert verify_examples().to_text() == verify_examples().to_text()


def test_json_report_has_one_record_per_claim():
    report = verify_linearizations()
    doc = json.loads(report.to_json())
    claims = [r["claim"] for r in doc["items"]]
    assert len(claims) == len(set(claims)) == len(report)
    assert doc["ok"] and all("elapsed" not in r for r in doc["items"])
    assert all("elapsed" in r for r in json.loads(report.to_json(timings=True))["items"])


def test_failing_item_does_not_abort():
    r = Report()
    r.check("boom", "raises", lambda: 1 / 0)
    r.check("fine", "passes", lambda: (True, "ok"))
    assert [it.status for it in r] == ["fail", "pass"]
    assert "ZeroDivisionError" in r["boom"].details


def test_matrix_goldens():
    algs = {n: builtin_algebra(n) for n in GOLDEN_MATRIX}
    assert membership_matrix(algs) == GOLDEN_MATRIX


def test_linearizations_and_inclusions():
    assert verify_linearizations().ok
    assert verify_inclusions().ok


def test_small_degree_sweeps():
    assert verify_lemma_ekel(6).ok
    assert verify_theorem_unary(6).ok
    assert verify_theorem_binary(5).ok
    assert verify_lemma_skew_and_eq13(5).ok


def test_delta_minus_uy_records_a_counterexample():
    item = verify_delta_minus_uy(3)["delta-minus-uy"]
    assert item.passed
    assert "smallest u: y\n" in item.details + "\n"


def test_dialgebra_remarks():
    report = verify_dialgebra_remarks()
    assert report.ok, report.to_text()
    assert "120 monomials" in report["dialgebra.binary-lie"].details


def test_thread_count_does_not_change_the_report():
    one = verify_theorem_binary(5, threads=1).to_text()
    four = verify_theorem_binary(5, threads=4).to_text()
    assert one == four


@pytest.mark.slow
def test_cli_verify_paper_json(capsys):
    import io

    out = io.StringIO()
    code = run(["verify-paper", "--max-degree-unary", "6", "--max-degree-binary", "5", "--eq13-degree", "5",
                "--json"], out)
    doc = json.loads(out.getvalue())
    assert code == 0 and doc["ok"]
