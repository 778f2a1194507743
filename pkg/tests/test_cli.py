import json

import pytest

from burstcover.cli import (
    EXIT_BOUND_VIOLATION,
    EXIT_BUDGET,
    EXIT_OK,
    TABLE1_FIXTURE,
    compute_table1,
    main,
)
from burstcover.codes import code_to_descriptor, make_bch


def run(capsys, *argv):
    rc = main(list(argv))
    return rc, capsys.readouterr().out


def test_radius_family_flags(capsys):
    rc, out = run(capsys, "radius", "--family", "bch", "--e", "2", "--m", "6")
    assert rc == EXIT_OK and "radius 9" in out


def test_radius_generic_and_methods(capsys):
    for method in ("orbit", "matrix", "geometric"):
        rc, out = run(capsys, "radius", "--family", "generic", "--n", "7",
                      "--g", "x^3+x+1", "--method", method)
        assert rc == EXIT_OK and "radius 1" in out


def test_radius_from_descriptor(tmp_path, capsys):
    path = tmp_path / "code.json"
    path.write_text(json.dumps(code_to_descriptor(make_bch(2, 5))))
    rc, out = run(capsys, "radius", "--code", str(path), "--emit", "json")
    assert rc == EXIT_OK
    assert json.loads(out)["b"] == 8


def test_radius_budget_exit_code(capsys):
    rc, _ = run(capsys, "radius", "--family", "bch", "--e", "2", "--m", "6",
                "--method", "matrix", "--max-r", "5")
    assert rc == EXIT_BUDGET


def test_bounds_with_radius(capsys):
    rc, out = run(capsys, "bounds", "--family", "melas", "--m", "5",
                  "--with-radius", "--emit", "json")
    assert rc == EXIT_OK
    payload = json.loads(out)
    assert payload["violations"] == []
    assert payload["radius"] >= 7  # m + 2


def test_cover_round_trip(capsys):
    rc, out = run(capsys, "cover", "--family", "bch", "--e", "2", "--m", "6",
                  "--syndrome", "0FFF", "--bprime", "9", "--emit", "json")
    assert rc == EXIT_OK
    payload = json.loads(out)
    assert payload["verified"] is True and payload["width"] <= 9


def test_table1_plain_and_exit(capsys):
    rc, out = run(capsys, "table1", "--m-max", "7")
    assert rc == EXIT_OK
    assert "modulus-dependent" in out  # Melas(6) needs a non-default class


def test_table1_fixture_values():
    rows = compute_table1(6, 8)
    for row in rows:
        fix = TABLE1_FIXTURE[row["m"]]
        assert row["upper"] == fix[2]
        if not row["matches_fixture"]:
            assert row["fixture_attained_by_some_class"]


def test_table1_json_deterministic(capsys):
    rc1, out1 = run(capsys, "table1", "--m-max", "6", "--emit", "json")
    rc2, out2 = run(capsys, "table1", "--m-max", "6", "--emit", "json")
    assert rc1 == rc2 == EXIT_OK
    assert out1 == out2


def test_table1_csv_matches_json_payload(capsys):
    _, csv_out = run(capsys, "table1", "--m-max", "6", "--emit", "csv", "--no-assert")
    _, json_out = run(capsys, "table1", "--m-max", "6", "--emit", "json", "--no-assert")
    rows = json.loads(json_out)
    lines = csv_out.strip().splitlines()
    header = lines[0].split(",")
    values = lines[1].split(",")
    rec = dict(zip(header, values))
    assert int(rec["bch"]) == rows[0]["bch"]
    assert int(rec["melas"]) == rows[0]["melas"]
    assert int(rec["upper"]) == rows[0]["upper"]


def test_lfsr_stats_dump_format(capsys):
    rc, out = run(capsys, "lfsr-stats", "--g", "0xB", "--init", "1,0,0", "--len", "7")
    assert rc == EXIT_OK
    assert out.strip() == "0x1 : 1001011"


def test_lfsr_stats_orbit_reps(capsys):
    rc, out = run(capsys, "lfsr-stats", "--g", "0xB", "--orbit-reps", "--len", "7")
    assert rc == EXIT_OK
    lines = out.strip().splitlines()
    assert len(lines) == 1  # primitive: a single shift orbit
    assert " : " in lines[0]


def test_lfsr_stats_pattern_json(capsys):
    rc, out = run(capsys, "lfsr-stats", "--g", "0xB", "--init", "1,0,0",
                  "--pattern", "10", "--window", "7")
    assert rc == EXIT_OK
    payload = json.loads(out)
    assert payload == {"count": 2, "init": "0x1", "pattern": "10", "window": 7}


def test_verify_appendix(capsys):
    rc, out = run(capsys, "verify", "appendix", "--max", "15")
    assert rc == EXIT_OK
    payload = json.loads(out)
    assert payload["cases_checked"] == 225 and payload["violations"] == []


def test_verify_equivalence_small(capsys):
    rc, out = run(capsys, "verify", "equivalence", "--nmax", "21")
    assert rc == EXIT_OK
    assert json.loads(out)["violations"] == []


def test_verify_patterns_bch(capsys):
    rc, out = run(capsys, "verify", "patterns", "--family", "bch", "--m", "6",
                  "--s-max", "3")
    assert rc == EXIT_OK
    payload = json.loads(out)
    assert all(rep["ok"] for rep in payload["reports"])


def test_verify_charsums_quick(capsys):
    rc, out = run(capsys, "verify", "charsums", "--m-max", "4",
                  "--laurent-m-max", "4", "--draws", "20", "--seed", "9")
    assert rc == EXIT_OK


def test_radius_csv_payload(capsys):
    import csv
    import io

    rc, out = run(capsys, "radius", "--family", "bch", "--e", "2", "--m", "5",
                  "--emit", "csv")
    assert rc == EXIT_OK
    rec = next(csv.DictReader(io.StringIO(out)))
    assert rec["b"] == "8" and rec["method"] == "orbit"


def test_fixture_mismatch_exit_code():
    from burstcover.cli import EXIT_FIXTURE_MISMATCH, _table1_exit

    rows = [{"m": 6, "matches_fixture": False,
             "fixture_attained_by_some_class": False}]
    assert _table1_exit(rows) == EXIT_FIXTURE_MISMATCH
    rows[0]["fixture_attained_by_some_class"] = True
    assert _table1_exit(rows) == EXIT_OK


def test_violation_exit_code(capsys, monkeypatch):
    import burstcover.cli as cli_mod

    monkeypatch.setattr(cli_mod, "gcd_power_inequality_check", lambda a, b: False)
    rc, out = run(capsys, "verify", "appendix", "--max", "3")
    assert rc == EXIT_BOUND_VIOLATION
    assert json.loads(out)["violations"]


def test_code_source_required(capsys):
    with pytest.raises(SystemExit):
        main(["radius"])
    with pytest.raises(SystemExit):
        main(["radius", "--family", "bch", "--e", "2", "--m", "6",
              "--code", "whatever.json"])
