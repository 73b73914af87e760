import json

import pytest

from skewsxp.abacus import sgn_r, skew_quotient
from skewsxp.frontier import (
    TABLE_CASES,
    carre_leclerc_check,
    classify,
    count_cwl,
    count_rntl,
    hook_check,
    hook_column_word_ok,
    reproduce_table,
    ribbon_counts,
    summarize,
    table_row,
    two_row_weights,
    verify_conjecture,
)
from skewsxp.partitions import partitions, partitions_containing, skew
from skewsxp.ribbon import column_word, enumerate_ribbon_tableaux, row_number_tableau
from skewsxp.symfunc import kostka, oracle_product_plethysm
from skewsxp.tableaux import enumerate_multitableaux


def test_two_row_weights():
    assert two_row_weights(4) == [(4,), (3, 1), (2, 2)]
    assert two_row_weights(0) == [()]


def test_domino_example_with_hook_weight():
    s = skew((5, 5, 2, 2), (3, 1))
    assert count_cwl(s, (3, 1, 1), 2) == 2
    words = sorted(column_word(T) for T in enumerate_ribbon_tableaux(s, (3, 1, 1), 2) if classify(T)[0])
    assert words == [(1, 3, 1, 2, 1), (3, 2, 1, 1, 1)]
    assert carre_leclerc_check((3, 1), (3, 1, 1), (5, 5, 2, 2))
    assert hook_check((3, 1), 3, 2, (5, 5, 2, 2), 2)


def test_hook_column_word_shape():
    assert hook_column_word_ok((3, 2, 1, 1, 1), 3, 2)
    assert hook_column_word_ok((1, 3, 1, 2, 1), 3, 2)
    assert not hook_column_word_ok((2, 3, 1, 1, 1), 3, 2)
    assert not hook_column_word_ok((3, 2, 1, 1), 3, 2)


def test_table_rows_other_than_the_first():
    rows = reproduce_table()
    assert [r.mult for r in rows] == [1, -1, 1, 1]
    assert [r.rt for r in rows][1:] == [9, 6, 2]
    assert [r.cwl for r in rows] == [0, 0, 0, 2]
    assert [r.rntl for r in rows] == [2, 0, 0, 2]
    assert json.dumps(rows[3].to_json())


def test_first_table_row_has_seven_ribbon_tableaux():
    """Three independent counts of 3-RT((6,6,6), (3,3)) all give 7."""
    tau, lam, r, nu = TABLE_CASES[0]
    assert table_row(tau, lam, r, nu).rt == 7
    # semistandard tableaux on the quotient, which the bijection matches one to one
    assert sum(1 for _ in enumerate_multitableaux(skew_quotient(skew(nu), r), lam)) == 7
    # <h_lam o p_r, s_nu> = sum_kappa K_{kappa lam} <s_kappa o p_r, s_nu> counts signed tableaux
    total = sum(kostka(kappa, lam) * oracle_product_plethysm((), skew(kappa), r).get(nu) for kappa in partitions(6))
    assert abs(total) == 7 and sgn_r(skew(nu), r) * 7 == total


@pytest.mark.parametrize("lam", [(1,), (2,), (1, 1), (2, 1), (3,), (1, 1, 1)])
def test_domino_rule_small(lam):
    for tau in [(), (1,), (2,), (1, 1)]:
        for nu in partitions_containing(tau, sum(tau) + 2 * sum(lam)):
            assert carre_leclerc_check(tau, lam, nu)


@pytest.mark.parametrize("r", [2, 3])
@pytest.mark.parametrize("a,b", [(1, 0), (1, 1), (2, 1), (1, 2), (2, 2), (3, 1)])
def test_hook_rule(r, a, b):
    if r * (a + b) > 12:
        pytest.skip("too large")
    for tau in [(), (1,)]:
        for nu in partitions_containing(tau, sum(tau) + r * (a + b)):
            assert hook_check(tau, a, b, nu, r)


def test_ribbon_counts_consistency():
    c = ribbon_counts(skew((3, 3, 3, 3)), (2, 2), 3)
    assert (c.rt, c.cwl, c.rntl, c.cwl_not_rntl) == (2, 1, 2, 0)
    assert count_rntl(skew((3, 3, 3, 3)), (2, 2), 3) == 2


def test_row_number_and_column_word_coincide_for_the_domino_hook_witnesses():
    s = skew((5, 5, 2, 2), (3, 1))
    for T in enumerate_ribbon_tableaux(s, (3, 1, 1), 2):
        cwl, rntl = classify(T)
        assert cwl == rntl
        if rntl:
            assert column_word(T) == row_number_tableau(T).word()


@pytest.mark.parametrize("r,nu", [(2, (3, 3)), (3, (5, 4)), (4, (7, 5))])
def test_hook_witness_whose_words_differ(r, nu):
    """A latticed row-number tableau for weight (2, 1) whose column word is a
    different latticed word."""
    (T,) = [T for T in enumerate_ribbon_tableaux(skew(nu), (2, 1), r) if classify(T)[1]]
    assert row_number_tableau(T).word() == (2, 1, 1)
    assert column_word(T) == (1, 2, 1)
    assert hook_check((), 2, 1, nu, r)


# The conjecture harness.

def test_small_run(tmp_path):
    out = tmp_path / "report.jsonl"
    report = verify_conjecture(2, 4, out)
    assert report.ok
    assert report.cells == sum(len(two_row_weights(n)) * len(list(partitions(r * n))) for r in (1, 2) for n in range(5))
    lines = out.read_text().splitlines()
    assert len(lines) == report.cells
    data = report.to_json()
    assert data["ok"] and data["violations"] == [] and data["min_slack"] >= 0


def test_b_equal_one_cells_are_tight(tmp_path):
    report = verify_conjecture(3, 4, tmp_path / "r.jsonl")
    recs = [json.loads(x) for x in (tmp_path / "r.jsonl").read_text().splitlines()]
    b1 = [rec for rec in recs if len(rec["lambda"]) == 2 and rec["lambda"][1] == 1]
    assert b1 and all(rec["rntl"] == abs(rec["mult"]) for rec in b1)
    assert report.b1_inequalities == []


def test_resume_completes_an_interrupted_report(tmp_path):
    full = tmp_path / "full.jsonl"
    verify_conjecture(2, 4, full)
    partial = tmp_path / "partial.jsonl"
    lines = full.read_text().splitlines()
    partial.write_text("\n".join(lines[:7]) + "\n" + lines[7][:5])  # truncated last line
    report = verify_conjecture(2, 4, partial, resume=True)
    assert report.ok
    assert partial.read_text() == full.read_text()


def test_reports_are_deterministic_and_independent_of_jobs(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    verify_conjecture(2, 4, a, jobs=1)
    verify_conjecture(2, 4, b, jobs=2)
    assert a.read_bytes() == b.read_bytes()


def test_audit_rate_one_checks_every_cell(tmp_path):
    report = verify_conjecture(2, 3, tmp_path / "x.jsonl", audit_rate=1.0)
    assert report.audited == report.cells and report.audit_failures == 0


def test_summarize_flags_violations(tmp_path):
    recs = [{"r": 2, "n": 2, "nu": [4], "lambda": [2], "mult": 2, "rt": 1, "cwl": 0, "rntl": 1},
            {"r": 2, "n": 2, "nu": [2, 2], "lambda": [1, 1], "mult": 0, "rt": 1, "cwl": 0, "rntl": 1}]
    report = summarize(tmp_path / "s.jsonl", recs)
    assert not report.ok
    assert len(report.violations) == 1 and len(report.b1_inequalities) == 1
    assert report.min_slack == -1 and report.max_slack == 1
