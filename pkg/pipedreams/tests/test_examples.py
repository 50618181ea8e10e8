import pytest

from .. import fixtures, verification
from ..bpd import grassmannian_to_ssyt
from ..insertion import PlacticBiword, phi
from ..knuth import VerificationReport
from ..tableau import colread, split_first_column, split_first_row

W = PlacticBiword.k_biword


def test_spit_out_first_column():
    T = fixtures.ABSORB_TABLEAU
    rest, column = split_first_column(T)
    assert phi(W(colread(rest), 5) + W(column, 4)) == phi(W(colread(T), 4))


def test_spit_out_first_row():
    T = fixtures.ABSORB_TABLEAU
    row, rest = split_first_row(T)
    assert phi(W(row, 4) + W(colread(rest), 3)) == phi(W(colread(T), 4))


def test_grassmannian_absorption():
    before = W(fixtures.ABSORB_WORD, 4) + PlacticBiword([(2, 2)])
    D = phi(before)
    assert D.perm.descents == {4}
    assert grassmannian_to_ssyt(D, 4) == fixtures.ABSORBED_TABLEAU


def test_absorb_lemmas():
    report = verification.verify_absorb(max_len=3, max_label=2)
    assert report.checked > 0
    assert report.ok, report.failures


@pytest.mark.parametrize("name", ["associativity", "soundness", "monk", "product", "oracles"])
def test_small_suites(name):
    (report,) = verification.run_suite(name, max_n=3)
    assert report.name == name
    assert report.ok, report.failures


def test_run_suite_records_crashes(monkeypatch):
    def explode(max_n):
        raise RuntimeError("boom")

    monkeypatch.setitem(verification.SUITES, "monk", explode)
    (report,) = verification.run_suite("monk", max_n=2)
    assert not report.ok
    assert "boom" in report.failures[0]


def test_report_table():
    report = VerificationReport(name="demo", rows=[{"perm": "21", "fiber": 1}])
    report.checked = 1
    assert report.table().splitlines()[0] == "demo: PASS (1 checked)"
    report.fail("broken")
    assert report.as_dict()["ok"] is False
    assert report.table().endswith("  ! broken")


@pytest.mark.slow
def test_worked_examples():
    report = verification.verify_examples()
    assert report.ok, report.failures
