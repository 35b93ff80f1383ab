"""End-to-end checks of the command-line front end, run in-process."""

import io
import json

import pytest

from constacode import cli


def run(capsys, *argv):
    rc = cli.main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def run_json(capsys, *argv):
    rc, out, err = run(capsys, *argv, "--output", "json")
    return rc, json.loads(out), err


# ---------------------------------------------------------------------------
# factor

def test_factor_table_n3(capsys):
    rc, out, _ = run(capsys, "factor", "-n", "3", "-m", "2")
    assert rc == 0
    assert "3 irreducible factors" in out
    assert out.count("\n") == 4  # header + three factors


def test_factor_json_n85(capsys):
    rc, payload, _ = run_json(capsys, "factor", "-n", "85", "-m", "2")
    assert rc == 0
    assert payload["count"] == 23
    degrees = sorted(f["degree"] for f in payload["factors"])
    assert degrees == [1, 2, 2] + [4] * 20
    total = sum(degrees)
    assert total == 85


def test_factor_lift_paper_form(capsys):
    rc, out, _ = run(capsys, "factor", "-n", "5", "-m", "2",
                     "--lift", "--paper-form")
    assert rc == 0
    assert "(1+u)*x^2 + w*x + 1+u" in out


def test_factor_even_length_rejected(capsys):
    rc, _, err = run(capsys, "factor", "-n", "4", "-m", "2")
    assert rc == 2 and "error:" in err


def test_factor_unsupported_field(capsys):
    rc, _, err = run(capsys, "factor", "-n", "3", "-m", "9")
    assert rc == 2 and "1..8" in err


# ---------------------------------------------------------------------------
# build / verify / gray and the descriptor round trip

BUILD_ARGS = ["build", "-n", "3", "-m", "2", "--f", "x + 1+u",
              "--g", "x + w*(1+u)", "--h", "x + (w+1)*(1+u)"]


def test_build_table(capsys):
    rc, out, _ = run(capsys, *BUILD_ARGS)
    assert rc == 0
    assert "|C| = 2^6" in out
    assert "Gray image: [12, 6]" in out


def test_build_json_feeds_every_reader(capsys, monkeypatch):
    rc, desc, _ = run_json(capsys, *BUILD_ARGS)
    assert rc == 0
    assert {"n", "m", "f", "g", "h"} <= set(desc)
    text = json.dumps(desc)
    for argv in (["verify", "-"], ["gray", "-"], ["distance", "-"]):
        monkeypatch.setattr("sys.stdin", io.StringIO(text))
        rc, _, _ = run(capsys, *argv)
        assert rc == 0, argv


def test_full_space_build_is_quantum_ready(capsys, monkeypatch):
    rc, desc, _ = run_json(capsys, "build", "-n", "3", "-m", "2",
                           "--f", "1", "--g", "x^3 + 1+u", "--h", "1")
    assert rc == 0
    assert desc["dual_containing"] is True
    assert desc["cardinality_log2"] == 12
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps(desc)))
    rc, payload, _ = run_json(capsys, "quantum", "-")
    assert rc == 0
    assert payload == {"n": 12, "k": 12, "d": 1, "d_mode": "exact"}


def test_zero_code_build(capsys):
    rc, out, _ = run(capsys, "build", "-n", "3", "-m", "2",
                     "--f", "x^3 + 1+u", "--g", "1", "--h", "1")
    assert rc == 0
    assert "|C| = 2^0" in out
    assert "dual-containing: no" in out


def test_verify_shipped_example(capsys):
    rc, out, _ = run(capsys, "verify", "5.5-c1")
    assert rc == 0
    assert "|C| = 2^2" in out
    assert "dual-containing: no" in out
    assert "Gray image: [12, 2]" in out


def test_verify_missing_key(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 3, "m": 2}'))
    rc, _, err = run(capsys, "verify", "-")
    assert rc == 2 and "missing key" in err


def test_verify_unreadable_path(capsys):
    rc, _, err = run(capsys, "verify", "/no/such/file.json")
    assert rc == 2 and "error:" in err


def test_gray_rows_match_dimension(capsys):
    rc, payload, _ = run_json(capsys, "gray", "5.5-c1")
    assert rc == 0
    assert payload["rows"] == ["9e70", "79e0"]
    assert len(payload["rows"]) == payload["dimension"] == 2
    assert payload["length"] == 12


# ---------------------------------------------------------------------------
# distance / quantum

def test_distance_exact(capsys):
    rc, out, _ = run(capsys, "distance", "5.5-c1")
    assert rc == 0
    assert "d = 8  (exact" in out


def test_distance_forced_search(capsys):
    rc, payload, _ = run_json(capsys, "distance", "5.5-n5",
                              "--mode", "upper_bound", "--budget", "200",
                              "--seed", "0xC0DE")
    assert rc == 0
    assert payload["mode"] == "upper_bound"
    assert payload["value"] >= 4  # true distance; search cannot beat it


def test_quantum_large_fixture(capsys):
    rc, payload, _ = run_json(capsys, "quantum", "6.6-93", "--budget", "64")
    assert rc == 0
    assert (payload["n"], payload["k"]) == (372, 304)
    assert payload["d_mode"] == "upper_bound"


def test_quantum_rejects_non_dual_containing(capsys):
    rc, _, err = run(capsys, "quantum", "5.5-n5")
    assert rc == 2
    assert "NotDualContaining" in err
    assert "does not divide" in err


# ---------------------------------------------------------------------------
# reproduce

def test_reproduce_classical_set(capsys):
    rc, out, _ = run(capsys, "reproduce", "5.5")
    assert rc == 0
    assert out.count("PASS") == 3
    assert "all checks passed" in out


def test_reproduce_quantum_fixture(capsys):
    rc, out, _ = run(capsys, "reproduce", "6.6-85", "--budget", "64")
    assert rc == 0
    assert "all checks passed" in out


def test_reproduce_all_json(capsys):
    rc, payload, _ = run_json(capsys, "reproduce", "all", "--budget", "8")
    assert rc == 0
    assert payload["pass"] is True
    assert {r["example"] for r in payload["results"]} == set(cli.FIXTURES)


def test_reproduce_flags_mismatch(capsys, monkeypatch):
    monkeypatch.setitem(cli.EXPECTED_GRAY, "5.5-c1", (12, 2, 9))
    rc, out, _ = run(capsys, "reproduce", "5.5")
    assert rc == 1
    assert "FAIL" in out and "MISMATCH" in out
