from fractions import Fraction

import pytest

from quarticpos.invariants import FormCoefficients
from quarticpos.oracle import read_forms
from quarticpos.tensor import BasisChange
from quarticpos.verify import (
    ASSERTED_IDS, IDENTITY_IDS, FuzzReport, criterion_equivalence_fuzz, law_comparison,
    run_identity_suite, transform_law_check, transformed_form,
)

F = Fraction


@pytest.fixture(scope="module")
def report():
    return run_identity_suite()


def test_every_id_once_in_fixed_order(report):
    assert tuple(e.id for e in report.entries) == IDENTITY_IDS
    assert len(set(IDENTITY_IDS)) == len(IDENTITY_IDS)


def test_status_matches_difference(report):
    for e in report.entries:
        zero = all(p.is_zero() for _, p in e.parts)
        if e.status == "proved":
            assert zero
        if e.status == "failed":
            assert not zero


@pytest.mark.parametrize("ident", [i for i in ASSERTED_IDS if i not in ("ID-BHAT", "ID-REL-7")])
def test_identity_proved(report, ident):
    assert report[ident].status == "proved", report[ident].difference


def test_bhat_sign_discrepancy(report):
    # the contraction as written gives Bhat = -(beta/2) d
    entry = report["ID-BHAT"]
    assert entry.status == "failed"
    labels = dict(entry.parts)
    assert labels["Bhat11"].is_zero() and labels["Bhat22"].is_zero()
    assert labels["Bhat12"] == -labels["Bhat21"]


def test_eps9_relation_discrepancy(report):
    # eps9 as summed equals -2 eps5 (the same as eps8), not +2 eps5
    entry = report["ID-REL-7"]
    assert entry.status == "failed"
    assert entry.parts[0][1] == report["ID-REL-6"].parts[0][1] - 4 * _eps5_poly()


def _eps5_poly():
    from quarticpos.tensor import named_object, symmetric_form_tensor
    return named_object("eps5", symmetric_form_tensor(FormCoefficients.symbolic())).scalar


def test_reported_only_entry_prints_difference(report):
    entry = report["ID-721"]
    assert entry.status == "reported-only"
    assert "ID-721" in report.render() and "difference: 0" in report.render()


def test_render_is_deterministic():
    assert run_identity_suite().render() == run_identity_suite().render()


def test_record_shape(report):
    rec = report.to_record()
    assert rec["ok"] is False
    assert set(rec["entries"][0]) == {"id", "status", "difference", "millis"}


def test_transform_examples():
    c = FormCoefficients.of(1, 0, 0, 0, 1)
    laws = law_comparison(c, BasisChange.from_entries(2, 0, 0, 1))
    assert laws["beta"][:3] == (-2, -32, 16) and all(v[3] for v in laws.values())
    assert transformed_form(c, BasisChange.identity()) == c
    flat = FormCoefficients.of(1, -1, 1, -1, 1)
    for old, new, _, holds in law_comparison(flat, BasisChange.from_entries(3, 1, -2, 5)).values():
        assert old == new == 0 and holds


def test_transform_law_check_small():
    assert transform_law_check(25, seed=9).ok
    with pytest.raises(ValueError):
        transform_law_check(0)


@pytest.mark.parametrize("profile", ["uniform", "sos", "indefinite", "boundary"])
def test_fuzz_profiles(profile):
    r = criterion_equivalence_fuzz(200, 1, profile)
    assert r.ok and r.tested == 200
    if profile == "indefinite":
        assert r.positives == 0


def test_fuzz_writes_fixtures_on_disagreement(tmp_path, monkeypatch):
    import quarticpos.verify as v
    monkeypatch.setattr(v, "oracle_positive", lambda c: True)  # force disagreements
    path = tmp_path / "fail.txt"
    r = criterion_equivalence_fuzz(3, 0, "boundary", fixture_path=path)
    assert not r.ok
    assert read_forms(path) == [d[1] for d in r.disagreements]
    assert "index=0" in path.read_text()


def test_fuzz_report_summary():
    r = FuzzReport("uniform", 0, tested=10, seconds=2.0)
    assert r.summary().startswith("uniform: 10 tested, 0 disagreements")
