import json
from fractions import Fraction

import pytest

from quarticpos import __version__
from quarticpos.cli import main
from quarticpos.invariants import InvariantSet


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_positive(capsys):
    code, out, _ = run(capsys, "check", "1", "0", "0", "0", "1")
    assert code == 0 and "positive (T41-3)" in out


def test_check_not_positive(capsys):
    code, out, _ = run(capsys, "check", "1", "-1", "1", "-1", "1")
    assert code == 1 and "not positive" in out


def test_check_parse_error(capsys):
    code, _, err = run(capsys, "check", "1 0 x 0 1")
    assert code == 2 and "cannot parse coefficient 3" in err


def test_negative_fractions_are_positional(capsys):
    code, out, _ = run(capsys, "check", "1", "0", "-1/3", "0", "1")
    assert code == 1 and "-1/3" in out


def test_check_json_round_trips_with_text(capsys):
    code, out, _ = run(capsys, "check", "--json", "1", "0", "1/3", "0", "1")
    record = json.loads(out)
    assert code == 0 and record["version"] == __version__ and record["path"] == "T41-4"
    inv = InvariantSet.from_record(record["invariants"])
    assert inv.gamma == Fraction(16, 9)
    _, text, _ = run(capsys, "check", "--invariants", "1", "0", "1/3", "0", "1")
    for key, value in record["invariants"].items():
        assert f"{key} = {value if value is not None else '-'}" in text


def test_monomial_flag(capsys):
    code, out, _ = run(capsys, "check", "--monomial", "1", "0", "2", "0", "1")
    assert code == 0 and out.startswith("1 0 1/3 0 1")


def test_batch_file_preserves_order(capsys, tmp_path):
    path = tmp_path / "forms.txt"
    path.write_text("# header\n1 0 0 0 1\n1, -1, 1, -1, 1\n\n1 0 1/3 0 1\n")
    code, out, _ = run(capsys, "check", "--file", str(path))
    lines = out.splitlines()
    assert code == 1 and len(lines) == 3
    assert lines[0].startswith("1 0 0 0 1") and "not positive" in lines[1]
    code, out, _ = run(capsys, "check", "--json", "--file", str(path))
    assert [r["positive"] for r in json.loads(out)] == [True, False, True]


def test_batch_file_error(capsys, tmp_path):
    path = tmp_path / "forms.txt"
    path.write_text("1 0 0 0 1\nbad line here x y\n")
    code, _, err = run(capsys, "check", "--file", str(path))
    assert code == 2 and ":2:" in err
    code, _, err = run(capsys, "check", "--file", str(tmp_path / "missing.txt"))
    assert code == 2


def test_invariants_command(capsys):
    code, out, _ = run(capsys, "invariants", "--json", "1 0 0 0 1")
    assert code == 0 and json.loads(out)["invariants"]["beta"] == "-2"


def test_transform_worked_example(capsys):
    code, out, _ = run(capsys, "transform", "1", "0", "0", "0", "1", "--matrix", "2,0,0,1")
    assert code == 0
    assert "transformed: 16 0 0 0 1" in out and "beta  -2 -> -32" in out
    code, out, _ = run(capsys, "transform", "--json", "1 0 0 0 1", "--matrix", "2 0 0 1")
    rec = json.loads(out)
    assert rec["laws"]["beta"] == {"old": "-2", "new": "-32", "factor": "16", "holds": True}


def test_transform_identity_and_singular(capsys):
    code, out, _ = run(capsys, "transform", "1 2 3 4 5", "--matrix", "1,0,0,1")
    assert code == 0 and "transformed: 1 2 3 4 5" in out
    code, _, err = run(capsys, "transform", "1 0 0 0 1", "--matrix", "1,1,2,2")
    assert code == 2 and "singular" in err


def test_fuzz_command(capsys, tmp_path):
    code, out, _ = run(capsys, "fuzz", "--count", "300", "--seed", "7", "--fixtures",
                       str(tmp_path / "f.txt"))
    assert code == 0 and "300 tested, 0 disagreements" in out
    code, out, _ = run(capsys, "fuzz", "--count", "6", "--profile", "boundary")
    assert code == 0 and len([l for l in out.splitlines() if "oracle=" in l]) == 6


def test_fuzz_count_zero_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["fuzz", "--count", "0"])
    assert info.value.code == 2


def test_verify_command(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 1 and "ID-721" in out and "reported-only" in out
    code, out, _ = run(capsys, "verify", "--json")
    assert len(json.loads(out)["entries"]) == 26


def test_diagrams_command(capsys):
    code, out, _ = run(capsys, "diagrams")
    assert code == 0 and "eps0_via_E" in out


def test_exit_statuses_on_fixture_corpus(capsys):
    from quarticpos.oracle import BOUNDARY_FIXTURES, oracle_positive
    for c in BOUNDARY_FIXTURES:
        code, _, _ = run(capsys, "check", str(c))
        assert code == (0 if oracle_positive(c) else 1)
